#include "fspt/twist.hpp"

#include <stdexcept>

namespace fspt {

namespace {

struct Term {
  std::array<int, 3> tuple;
  int coef;
  bool twisted;
};

template <class F>
void for_each_term(const FiniteGroup& g, int degree, std::span<const int> out, F&& emit) {
  if (degree == 1) {
    emit(Term{{out[1], 0, 0}, +1, true});
    emit(Term{{out[0], 0, 0}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), 0, 0}, -1, false});
  } else if (degree == 2) {
    emit(Term{{out[1], out[2], 0}, +1, true});
    emit(Term{{out[0], g.mul(out[1], out[2]), 0}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), out[2], 0}, -1, false});
    emit(Term{{out[0], out[1], 0}, -1, false});
  } else {
    emit(Term{{out[1], out[2], out[3]}, +1, true});
    emit(Term{{out[0], g.mul(out[1], out[2]), out[3]}, +1, false});
    emit(Term{{out[0], out[1], out[2]}, +1, false});
    emit(Term{{g.mul(out[0], out[1]), out[2], out[3]}, -1, false});
    emit(Term{{out[0], out[1], g.mul(out[2], out[3])}, -1, false});
  }
}

bool tuple_all_nonidentity(std::span<const int> t) {
  for (int x : t)
    if (x == FiniteGroup::identity()) return false;
  return true;
}

void check_degree(int degree) {
  if (degree < 1 || degree > 3) throw std::invalid_argument("linearize degree must be 1..3");
}

}  // namespace

IntMatrix linearize(const FiniteGroup& g, const Z2Hom& a, int degree) {
  check_degree(degree);
  const TupleIndexer out_ix(g.order(), degree + 1);
  const TupleIndexer in_ix(g.order(), degree);
  IntMatrix m = IntMatrix::Zero(2 * static_cast<Eigen::Index>(out_ix.count()),
                                2 * static_cast<Eigen::Index>(in_ix.count()));
  for (std::size_t t = 0; t < out_ix.count(); ++t) {
    const auto tup = out_ix.unpack(t);
    const std::span<const int> ot(tup.data(), static_cast<std::size_t>(degree + 1));
    const Bit twist = a(ot[0]);
    for_each_term(g, degree, ot, [&](const Term& term) {
      const std::size_t s = in_ix.index(
          std::span<const int>(term.tuple.data(), static_cast<std::size_t>(degree)));
      for (int comp = 0; comp < 2; ++comp) {
        const int in_comp = (term.twisted && twist) ? 1 - comp : comp;
        m(2 * static_cast<Eigen::Index>(t) + comp,
          2 * static_cast<Eigen::Index>(s) + in_comp) += term.coef;
      }
    });
  }
  return m;
}

IntMatrix linearize_normalized(const FiniteGroup& g, const Z2Hom& a, int degree) {
  check_degree(degree);
  const NormalizedIndexer out_ix(g.order(), degree + 1);
  const NormalizedIndexer in_ix(g.order(), degree);
  IntMatrix m = IntMatrix::Zero(2 * static_cast<Eigen::Index>(out_ix.count()),
                                2 * static_cast<Eigen::Index>(in_ix.count()));
  for (std::size_t t = 0; t < out_ix.count(); ++t) {
    const auto tup = out_ix.unpack(t);
    const std::span<const int> ot(tup.data(), static_cast<std::size_t>(degree + 1));
    const Bit twist = a(ot[0]);
    for_each_term(g, degree, ot, [&](const Term& term) {
      const std::span<const int> it(term.tuple.data(), static_cast<std::size_t>(degree));
      if (!tuple_all_nonidentity(it)) return;  // normalized cochains vanish there
      const std::size_t s = in_ix.index(it);
      for (int comp = 0; comp < 2; ++comp) {
        const int in_comp = (term.twisted && twist) ? 1 - comp : comp;
        m(2 * static_cast<Eigen::Index>(t) + comp,
          2 * static_cast<Eigen::Index>(s) + in_comp) += term.coef;
      }
    });
  }
  return m;
}

IntMatrix linearize_normalized_plain(const FiniteGroup& g, int degree) {
  check_degree(degree);
  const NormalizedIndexer out_ix(g.order(), degree + 1);
  const NormalizedIndexer in_ix(g.order(), degree);
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(out_ix.count()),
                                static_cast<Eigen::Index>(in_ix.count()));
  for (std::size_t t = 0; t < out_ix.count(); ++t) {
    const auto tup = out_ix.unpack(t);
    const std::span<const int> ot(tup.data(), static_cast<std::size_t>(degree + 1));
    for_each_term(g, degree, ot, [&](const Term& term) {
      const std::span<const int> it(term.tuple.data(), static_cast<std::size_t>(degree));
      if (!tuple_all_nonidentity(it)) return;
      m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(in_ix.index(it))) += term.coef;
    });
  }
  return m;
}

IntMatrix linearize_diag_difference(const FiniteGroup& g, const Z2Hom& a, bool normalized) {
  const int degree = 2;
  if (normalized) {
    const NormalizedIndexer out_ix(g.order(), 3);
    const NormalizedIndexer in_ix(g.order(), 2);
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(out_ix.count()),
                                  2 * static_cast<Eigen::Index>(in_ix.count()));
    for (std::size_t t = 0; t < out_ix.count(); ++t) {
      const auto tup = out_ix.unpack(t);
      const std::span<const int> ot(tup.data(), 3);
      const Bit twist = a(ot[0]);
      for_each_term(g, degree, ot, [&](const Term& term) {
        const std::span<const int> it(term.tuple.data(), 2);
        if (!tuple_all_nonidentity(it)) return;
        const std::size_t s = in_ix.index(it);
        const int plus_in = (term.twisted && twist) ? 1 : 0;
        m(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(s) + plus_in) += term.coef;
        m(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(s) + (1 - plus_in)) -=
            term.coef;
      });
    }
    return m;
  }
  const TupleIndexer out_ix(g.order(), 3);
  const TupleIndexer in_ix(g.order(), 2);
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(out_ix.count()),
                                2 * static_cast<Eigen::Index>(in_ix.count()));
  for (std::size_t t = 0; t < out_ix.count(); ++t) {
    const auto tup = out_ix.unpack(t);
    const std::span<const int> ot(tup.data(), 3);
    const Bit twist = a(ot[0]);
    for_each_term(g, degree, ot, [&](const Term& term) {
      const std::size_t s = in_ix.index(std::span<const int>(term.tuple.data(), 2));
      const int plus_in = (term.twisted && twist) ? 1 : 0;
      m(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(s) + plus_in) += term.coef;
      m(static_cast<Eigen::Index>(t), 2 * static_cast<Eigen::Index>(s) + (1 - plus_in)) -=
          term.coef;
    });
  }
  return m;
}

IntVector discretize(const BitCochain& x) {
  IntVector v = IntVector::Zero(2 * static_cast<Eigen::Index>(x.tuple_count()));
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    const BitPair p = x.get(t);
    v(2 * static_cast<Eigen::Index>(t)) = p.plus;
    v(2 * static_cast<Eigen::Index>(t) + 1) = p.minus;
  }
  return v;
}

IntVector discretize_num(const PhaseCochain& x) {
  IntVector v = IntVector::Zero(2 * static_cast<Eigen::Index>(x.tuple_count()));
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    v(2 * static_cast<Eigen::Index>(t)) = x.raw(t, 0);
    v(2 * static_cast<Eigen::Index>(t) + 1) = x.raw(t, 1);
  }
  return v;
}

Gf2Vec discretize_gf2(const BitCochain& x) {
  Gf2Vec v(2 * x.tuple_count());
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    const BitPair p = x.get(t);
    v.set(2 * t, p.plus);
    v.set(2 * t + 1, p.minus);
  }
  return v;
}

BitCochain bit_cochain_from_gf2(const GroupPtr& g, int degree, const Gf2Vec& v) {
  BitCochain out(g, degree);
  for (std::size_t t = 0; t < out.tuple_count(); ++t)
    out.set(t, BitPair{static_cast<Bit>(v.get(2 * t)), static_cast<Bit>(v.get(2 * t + 1))});
  return out;
}

PhaseCochain phase_cochain_from_num(const GroupPtr& g, int degree, const IntVector& num,
                                    std::int64_t den) {
  PhaseCochain out(g, degree, den);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    out.set_raw(t, 0, num(2 * static_cast<Eigen::Index>(t)));
    out.set_raw(t, 1, num(2 * static_cast<Eigen::Index>(t) + 1));
  }
  return out;
}

Gf2Vec restrict_normalized(const BitCochain& x) {
  const NormalizedIndexer nix(x.group()->order(), x.degree());
  Gf2Vec v(2 * nix.count());
  for (std::size_t t = 0; t < nix.count(); ++t) {
    const auto tup = nix.unpack(t);
    const BitPair p = x.at(std::span<const int>(tup.data(), static_cast<std::size_t>(x.degree())));
    v.set(2 * t, p.plus);
    v.set(2 * t + 1, p.minus);
  }
  return v;
}

IntVector restrict_normalized_num(const PhaseCochain& x) {
  const NormalizedIndexer nix(x.group()->order(), x.degree());
  IntVector v = IntVector::Zero(2 * static_cast<Eigen::Index>(nix.count()));
  for (std::size_t t = 0; t < nix.count(); ++t) {
    const auto tup = nix.unpack(t);
    const std::size_t s = x.indexer().index(
        std::span<const int>(tup.data(), static_cast<std::size_t>(x.degree())));
    v(2 * static_cast<Eigen::Index>(t)) = x.raw(s, 0);
    v(2 * static_cast<Eigen::Index>(t) + 1) = x.raw(s, 1);
  }
  return v;
}

BitCochain embed_normalized(const GroupPtr& g, int degree, const Gf2Vec& v) {
  BitCochain out(g, degree);
  const NormalizedIndexer nix(g->order(), degree);
  for (std::size_t t = 0; t < nix.count(); ++t) {
    const auto tup = nix.unpack(t);
    out.set(std::span<const int>(tup.data(), static_cast<std::size_t>(degree)),
            BitPair{static_cast<Bit>(v.get(2 * t)), static_cast<Bit>(v.get(2 * t + 1))});
  }
  return out;
}

PhaseCochain embed_normalized(const GroupPtr& g, int degree, const IntVector& num,
                              std::int64_t den) {
  PhaseCochain out(g, degree, den);
  const NormalizedIndexer nix(g->order(), degree);
  for (std::size_t t = 0; t < nix.count(); ++t) {
    const auto tup = nix.unpack(t);
    const std::size_t s =
        out.indexer().index(std::span<const int>(tup.data(), static_cast<std::size_t>(degree)));
    out.set_raw(s, 0, num(2 * static_cast<Eigen::Index>(t)));
    out.set_raw(s, 1, num(2 * static_cast<Eigen::Index>(t) + 1));
  }
  return out;
}

TwistSystem::TwistSystem(GroupPtr group, Z2Hom a) : group_(std::move(group)), a_(std::move(a)) {
  if (!is_z2_hom(*group_, a_.values)) throw std::invalid_argument("a is not a Z2 homomorphism");
}

const Gf2System& TwistSystem::bits(int degree, bool normalized) {
  const auto key = std::make_pair(degree, normalized);
  auto it = bits_.find(key);
  if (it == bits_.end())
    it = bits_.emplace(key, Gf2System(Gf2Matrix::from_int(ints(degree, normalized)))).first;
  return it->second;
}

const IntMatrix& TwistSystem::ints(int degree, bool normalized) {
  const auto key = std::make_pair(degree, normalized);
  auto it = ints_.find(key);
  if (it == ints_.end())
    it = ints_
             .emplace(key, normalized ? linearize_normalized(*group_, a_, degree)
                                      : linearize(*group_, a_, degree))
             .first;
  return it->second;
}

const SmithForm& TwistSystem::smith(int degree, bool normalized) {
  const auto key = std::make_pair(degree, normalized);
  auto it = smith_.find(key);
  if (it == smith_.end()) it = smith_.emplace(key, smith_normal_form(ints(degree, normalized))).first;
  return it->second;
}

const IntMatrix& TwistSystem::diag_difference(bool normalized) {
  auto it = diff_.find(normalized);
  if (it == diff_.end())
    it = diff_.emplace(normalized, linearize_diag_difference(*group_, a_, normalized)).first;
  return it->second;
}

const SmithForm& TwistSystem::diag_difference_smith(bool normalized) {
  auto it = diff_smith_.find(normalized);
  if (it == diff_smith_.end())
    it = diff_smith_.emplace(normalized, smith_normal_form(diag_difference(normalized))).first;
  return it->second;
}

}  // namespace fspt
