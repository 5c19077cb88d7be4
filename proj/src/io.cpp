#include "fspt/io.hpp"

#include <fstream>

namespace fspt {

namespace {

const Json& field(const Json& j, const char* name, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(ptr + "/" + name, "missing field");
  return *it;
}

int int_field(const Json& j, const char* name, const std::string& ptr) {
  const Json& f = field(j, name, ptr);
  if (!f.is_number_integer()) throw SchemaError(ptr + "/" + name, "expected an integer");
  return f.get<int>();
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  Json table = Json::array();
  for (int r = 0; r < g.order(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.order(); ++c) row.push_back(g.mul(r, c));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

GroupPtr group_from_json(const Json& j, const std::string& ptr) {
  const int order = int_field(j, "order", ptr);
  const Json& table = field(j, "table", ptr);
  if (!table.is_array() || static_cast<int>(table.size()) != order)
    throw SchemaError(ptr + "/table", "expected " + std::to_string(order) + " rows");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    const Json& row = table[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw SchemaError(ptr + "/table/" + std::to_string(r), "expected a row of length " +
                                                                 std::to_string(order));
    for (int c = 0; c < order; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_number_integer())
        throw SchemaError(ptr + "/table/" + std::to_string(r) + "/" + std::to_string(c),
                          "expected an integer");
      flat.push_back(e.get<int>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& nm = j["names"];
    if (!nm.is_array() || static_cast<int>(nm.size()) != order)
      throw SchemaError(ptr + "/names", "expected " + std::to_string(order) + " labels");
    for (const auto& e : nm) {
      if (!e.is_string()) throw SchemaError(ptr + "/names", "expected strings");
      names.push_back(e.get<std::string>());
    }
  }
  try {
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table(order, std::move(flat), std::move(names)));
  } catch (const GroupError& e) {
    throw SchemaError(ptr, e.what());
  }
}

namespace {

GroupPtr group_ref_from_json(const Json& j, const std::string& ptr,
                             const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    Json g = read_json_file(p);
    return group_from_json(g, ptr + "(" + p.string() + ")");
  }
  return group_from_json(j, ptr);
}

void check_cochain_header(const Json& j, const char* kind, const std::string& ptr) {
  const Json& k = field(j, "kind", ptr);
  if (!k.is_string() || k.get<std::string>() != kind)
    throw SchemaError(ptr + "/kind", std::string("expected \"") + kind + "\"");
}

}  // namespace

Json cochain_to_json(const BitCochain& x) {
  Json j;
  j["group"] = group_to_json(*x.group());
  j["degree"] = x.degree();
  j["kind"] = "bit";
  Json entries = Json::array();
  for (std::size_t t = 0; t < x.tuple_count(); ++t) {
    const BitPair v = x.get(t);
    entries.push_back(Json::array({static_cast<int>(v.plus), static_cast<int>(v.minus)}));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json cochain_to_json(const PhaseCochain& x) {
  PhaseCochain c = x;
  c.canonicalize();
  Json j;
  j["group"] = group_to_json(*c.group());
  j["degree"] = c.degree();
  j["kind"] = "phase";
  j["denominator"] = c.den();
  Json entries = Json::array();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const PhasePair v = c.get(t);
    entries.push_back(Json::array({v.plus.str(), v.minus.str()}));
  }
  j["entries"] = std::move(entries);
  return j;
}

BitCochain bit_cochain_from_json(const Json& j, const std::string& ptr,
                                 const std::filesystem::path& base_dir) {
  check_cochain_header(j, "bit", ptr);
  GroupPtr g = group_ref_from_json(field(j, "group", ptr), ptr + "/group", base_dir);
  const int degree = int_field(j, "degree", ptr);
  if (degree < 1 || degree > 4) throw SchemaError(ptr + "/degree", "degree must be 1..4");
  BitCochain out(g, degree);
  const Json& entries = field(j, "entries", ptr);
  if (!entries.is_array() || entries.size() != out.tuple_count())
    throw SchemaError(ptr + "/entries",
                      "expected " + std::to_string(out.tuple_count()) + " entries");
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const Json& e = entries[t];
    const std::string eptr = ptr + "/entries/" + std::to_string(t);
    if (!e.is_array() || e.size() != 2) throw SchemaError(eptr, "expected [plus, minus]");
    BitPair v;
    for (int c = 0; c < 2; ++c) {
      const Json& b = e[static_cast<std::size_t>(c)];
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
        throw SchemaError(eptr + "/" + std::to_string(c), "expected a bit (0 or 1)");
      (c == 0 ? v.plus : v.minus) = static_cast<Bit>(b.get<int>());
    }
    out.set(t, v);
  }
  return out;
}

PhaseCochain phase_cochain_from_json(const Json& j, const std::string& ptr,
                                     const std::filesystem::path& base_dir) {
  check_cochain_header(j, "phase", ptr);
  GroupPtr g = group_ref_from_json(field(j, "group", ptr), ptr + "/group", base_dir);
  const int degree = int_field(j, "degree", ptr);
  if (degree < 1 || degree > 4) throw SchemaError(ptr + "/degree", "degree must be 1..4");
  const Json& denj = field(j, "denominator", ptr);
  if (!denj.is_number_integer() || denj.get<std::int64_t>() < 1)
    throw SchemaError(ptr + "/denominator", "expected a positive integer");
  PhaseCochain out(g, degree, denj.get<std::int64_t>());
  const Json& entries = field(j, "entries", ptr);
  if (!entries.is_array() || entries.size() != out.tuple_count())
    throw SchemaError(ptr + "/entries",
                      "expected " + std::to_string(out.tuple_count()) + " entries");
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const Json& e = entries[t];
    const std::string eptr = ptr + "/entries/" + std::to_string(t);
    if (!e.is_array() || e.size() != 2) throw SchemaError(eptr, "expected [plus, minus]");
    PhasePair v;
    for (int c = 0; c < 2; ++c) {
      const Json& s = e[static_cast<std::size_t>(c)];
      if (!s.is_string()) throw SchemaError(eptr + "/" + std::to_string(c), "expected \"p/q\"");
      const auto p = Phase::parse(s.get<std::string>(), /*require_reduced=*/true);
      if (!p)
        throw SchemaError(eptr + "/" + std::to_string(c),
                          "not a reduced fraction in [0,1): " + s.get<std::string>());
      if (out.den() % p->den() != 0)
        throw SchemaError(eptr + "/" + std::to_string(c),
                          "denominator does not divide the declared denominator");
      (c == 0 ? v.plus : v.minus) = *p;
    }
    out.set(t, v);
  }
  return out;
}

namespace {

Z2Hom a_from_json(const Json& j, const FiniteGroup& g, const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.order())
    throw SchemaError(ptr, "expected " + std::to_string(g.order()) + " bits");
  Z2Hom a;
  for (const auto& e : j) {
    if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
      throw SchemaError(ptr, "expected bits (0 or 1)");
    a.values.push_back(static_cast<Bit>(e.get<int>()));
  }
  if (!is_z2_hom(g, a.values)) throw SchemaError(ptr, "a is not a homomorphism to Z_2");
  return a;
}

std::vector<Bit> bits_from_json(const Json& j, const FiniteGroup& g, const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.order())
    throw SchemaError(ptr, "expected " + std::to_string(g.order()) + " bits");
  std::vector<Bit> b;
  for (const auto& e : j) {
    if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
      throw SchemaError(ptr, "expected bits (0 or 1)");
    b.push_back(static_cast<Bit>(e.get<int>()));
  }
  return b;
}

}  // namespace

Json triple_to_json(const PD0Triple& t) {
  Json j;
  Json a = Json::array();
  for (Bit v : t.a.values) a.push_back(static_cast<int>(v));
  j["a"] = std::move(a);
  j["kappa"] = cochain_to_json(t.kappa);
  j["c"] = cochain_to_json(t.c);
  return j;
}

PD0Triple triple_from_json(const Json& j, const std::filesystem::path& base_dir) {
  BitCochain kappa = bit_cochain_from_json(field(j, "kappa", ""), "/kappa", base_dir);
  PhaseCochain c = phase_cochain_from_json(field(j, "c", ""), "/c", base_dir);
  if (!(*kappa.group() == *c.group()))
    throw SchemaError("/c/group", "kappa and c live on different groups");
  if (kappa.degree() != 2) throw SchemaError("/kappa/degree", "kappa must have degree 2");
  if (c.degree() != 3) throw SchemaError("/c/degree", "c must have degree 3");
  GroupPtr g = kappa.group();
  Z2Hom a = a_from_json(field(j, "a", ""), *g, "/a");
  return PD0Triple{std::move(g), std::move(a), std::move(kappa), std::move(c)};
}

Json pentuple_to_json(const CRTPentuple& p) {
  Json j;
  Json a = Json::array();
  for (Bit v : p.a.values) a.push_back(static_cast<int>(v));
  j["a"] = std::move(a);
  Json b = Json::array();
  for (Bit v : p.b) b.push_back(static_cast<int>(v));
  j["b"] = std::move(b);
  j["kappaR"] = cochain_to_json(p.kappaR);
  j["kappaL"] = cochain_to_json(p.kappaL);
  j["cR"] = cochain_to_json(p.cR);
  return j;
}

CRTPentuple pentuple_from_json(const Json& j, const std::filesystem::path& base_dir) {
  BitCochain kr = bit_cochain_from_json(field(j, "kappaR", ""), "/kappaR", base_dir);
  BitCochain kl = bit_cochain_from_json(field(j, "kappaL", ""), "/kappaL", base_dir);
  PhaseCochain cr = phase_cochain_from_json(field(j, "cR", ""), "/cR", base_dir);
  if (!(*kr.group() == *kl.group()) || !(*kr.group() == *cr.group()))
    throw SchemaError("/kappaL/group", "pentuple cochains live on different groups");
  if (kr.degree() != 2 || kl.degree() != 2)
    throw SchemaError("/kappaR/degree", "kappa cochains must have degree 2");
  if (cr.degree() != 3) throw SchemaError("/cR/degree", "cR must have degree 3");
  GroupPtr g = kr.group();
  Z2Hom a = a_from_json(field(j, "a", ""), *g, "/a");
  std::vector<Bit> b = bits_from_json(field(j, "b", ""), *g, "/b");
  return CRTPentuple{std::move(g), std::move(a), std::move(b), std::move(kr), std::move(kl),
                     std::move(cr)};
}

Json equiv_certificate_to_json(const EquivCertificate& cert) {
  Json j;
  j["m"] = cochain_to_json(cert.m);
  j["sigma"] = cochain_to_json(cert.sigma);
  return j;
}

Json reduction_certificate_to_json(const ReductionCertificate& cert) {
  Json j;
  j["m"] = cochain_to_json(cert.m);
  j["kappa"] = cochain_to_json(cert.kappa);
  j["kappaPrime"] = cochain_to_json(cert.kappa_prime);
  j["cIntermediate"] = cochain_to_json(cert.c_intermediate);
  j["cTilde"] = cochain_to_json(cert.c_tilde);
  j["sigma"] = cochain_to_json(cert.sigma);
  j["eta"] = cochain_to_json(cert.eta);
  j["cHat"] = cochain_to_json(cert.c_hat);
  j["lift"] = cert.lift == BitLift::canonical01 ? "canonical01" : "negated01";
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) {
      cj["tuple"] = c.tuple;
      cj["detail"] = c.detail;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string(), e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError(path.string(), "cannot open file for writing");
  out << canonical_dump(j);
}

GroupPtr load_group(const std::filesystem::path& path) {
  return group_from_json(read_json_file(path), "");
}

PD0Triple load_triple(const std::filesystem::path& path) {
  return triple_from_json(read_json_file(path), path.parent_path());
}

CRTPentuple load_pentuple(const std::filesystem::path& path) {
  return pentuple_from_json(read_json_file(path), path.parent_path());
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const Json& j) {
  const std::string s = canonical_dump(j);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace fspt
