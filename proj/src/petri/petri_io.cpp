#include "canonlab/petri/petri_io.hpp"

#include <charconv>

#include "canonlab/polyring/poly_io.hpp"

namespace canonlab {

namespace {

std::vector<int> indices(const std::string& key, std::size_t count, bool commas) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < key.size()) {
    int v = 0;
    const std::size_t width = commas ? key.find(',', pos) - pos : 1;
    const auto end = key.data() + std::min(key.size(), pos + width);
    auto [ptr, ec] = std::from_chars(key.data() + pos, end, v);
    if (ec != std::errc() || ptr != end) throw SchemaError("petri: bad index key \"" + key + "\"");
    out.push_back(v);
    pos = static_cast<std::size_t>(end - key.data()) + (commas ? 1 : 0);
  }
  if (out.size() != count) throw SchemaError("petri: bad index key \"" + key + "\"");
  return out;
}

template <class K>
K scalar(const Json& v, const Ring<K>& ring) {
  if (v.is_number_integer()) return ring->scalar(v.get<long long>());
  if (!v.is_string()) throw SchemaError("petri: scalars must be integers or strings");
  const auto p = parse_poly<K>(v.get<std::string>(), ring);
  if (!p.is_constant()) throw SchemaError("petri: \"" + v.get<std::string>() + "\" is not a scalar");
  return p.is_zero() ? ring->zero() : p.leading_coefficient();
}

template <class K>
Json scalar_json(const K& v, const Ring<K>& ring) {
  const std::string text = is_zero(v) ? "0" : to_string(Polynomial<K>::constant(ring, v));
  long long n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec == std::errc() && ptr == text.data() + text.size()) return n;
  return text;
}

template <class K>
Polynomial<K> form(const Json& v, const Ring<K>& ring, const std::array<std::string, 2>& tail, unsigned degree,
                   const std::string& what) {
  if (!v.is_string()) throw SchemaError("petri: " + what + " must be a polynomial string");
  auto p = parse_poly<K>(v.get<std::string>(), ring);
  if (p.is_zero()) return p;
  if (!p.is_homogeneous() || *p.degree() != degree) {
    throw SchemaError("petri: " + what + " must be a form of degree " + std::to_string(degree));
  }
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto& name = ring->variables()[i];
    if (name != tail[0] && name != tail[1] && p.uses_variable(i)) {
      throw SchemaError("petri: " + what + " may only use " + tail[0] + " and " + tail[1]);
    }
  }
  return p;
}

const Json& member(const Json& j, const char* key) {
  static const Json empty = Json::object();
  if (!j.contains(key)) return empty;
  if (!j[key].is_object()) throw SchemaError(std::string("petri: \"") + key + "\" must be an object");
  return j[key];
}

std::string join(std::initializer_list<int> idx, bool commas) {
  std::string s;
  for (int v : idx) {
    if (!s.empty() && commas) s += ',';
    s += std::to_string(v);
  }
  return s;
}

template <class K>
void read_common(const Json& j, const Ring<K>& ring, const std::array<std::string, 2>& tail,
                 std::map<IndexTriple, Polynomial<K>>& a_diag, std::map<IndexPair, Polynomial<K>>& q) {
  for (const auto& [key, v] : member(j, "a_diag").items()) {
    const auto t = indices(key, 3, true);
    a_diag[{t[0], t[1], t[2]}] = form(v, ring, tail, 1, "a_diag[" + key + "]");
  }
  for (const auto& [key, v] : member(j, "q").items()) {
    const auto t = indices(key, 2, true);
    q[{t[0], t[1]}] = form(v, ring, tail, 2, "q[" + key + "]");
  }
}

template <class K>
void alpha_from(const Json& j, const Ring<K>& ring, const std::array<std::string, 2>& tail, std::span<Polynomial<K>> alpha) {
  if (!j.contains("alpha")) return;
  if (!j["alpha"].is_array() || j["alpha"].size() != alpha.size()) {
    throw SchemaError("petri: alpha must list " + std::to_string(alpha.size()) + " linear forms");
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] = form(j["alpha"][k], ring, tail, 1, "alpha");
}

template <class K>
void write_common(Json& out, const std::map<IndexTriple, Polynomial<K>>& a_diag, const std::map<IndexPair, Polynomial<K>>& q,
                  std::span<const Polynomial<K>> alpha) {
  Json a = Json::array();
  for (const auto& f : alpha) a.push_back(to_string(f));
  out["alpha"] = a;
  Json ad = Json::object();
  for (const auto& [t, f] : a_diag) ad[join({t[0], t[1], t[2]}, true)] = to_string(f);
  out["a_diag"] = ad;
  Json qj = Json::object();
  for (const auto& [p, f] : q) qj[join({p.first, p.second}, true)] = to_string(f);
  out["q"] = qj;
}

template <class T>
T checked(T sys) {
  try {
    validate(sys);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("petri: ") + e.what());
  }
  return sys;
}

}  // namespace

PetriFile petri_file_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("petri: expected an object");
  if (!j.contains("genus") || !j["genus"].is_number_integer()) throw SchemaError("petri: missing integer \"genus\"");
  if (!j.contains("field")) throw SchemaError("petri: missing \"field\"");
  PetriFile f;
  f.genus = j["genus"].get<int>();
  if (f.genus != 5 && f.genus != 6) throw SchemaError("petri: genus must be 5 or 6");
  f.field = field_from_json(j["field"]);
  f.document = j;
  return f;
}

template <class K>
PetriSystemG5<K> load_petri_g5(const PetriFile& file) {
  if (file.genus != 5) throw SchemaError("petri: not a genus-5 system");
  const auto ring = make_ring<K>(canonical_variables(5), file.field);
  auto sys = PetriSystemG5<K>::zero(ring);
  const Json& j = file.document;
  for (const auto& [key, v] : member(j, "rho").items()) {
    if (key != "123") throw SchemaError("petri: genus-5 rho has only the key \"123\"");
    sys.rho123 = scalar(v, ring);
  }
  if (j.contains("b")) throw SchemaError("petri: \"b\" is a genus-6 key");
  alpha_from<K>(j, ring, sys.tail, sys.alpha);
  read_common(j, ring, sys.tail, sys.a_diag, sys.q);
  return checked(std::move(sys));
}

template <class K>
PetriSystemG6<K> load_petri_g6(const PetriFile& file) {
  if (file.genus != 6) throw SchemaError("petri: not a genus-6 system");
  const auto ring = make_ring<K>(canonical_variables(6), file.field);
  auto sys = PetriSystemG6<K>::zero(ring);
  const std::array<std::string, 2> tail{"x0", "x5"};
  const Json& j = file.document;
  for (const auto& [key, v] : member(j, "rho").items()) {
    const auto t = indices(key, 3, false);
    if (triple_key(t[0], t[1], t[2]) != IndexTriple{t[0], t[1], t[2]}) throw SchemaError("petri: rho keys must be increasing");
    sys.set_rho(t[0], t[1], t[2], scalar(v, ring));
  }
  alpha_from<K>(j, ring, tail, sys.alpha);
  read_common(j, ring, tail, sys.a_diag, sys.q);
  if (j.contains("b")) {
    sys.b.emplace();
    for (const auto& [key, v] : member(j, "b").items()) {
      const auto t = indices(key, 2, true);
      (*sys.b)[{t[0], t[1]}] = scalar(v, ring);
    }
  }
  return checked(std::move(sys));
}

template <class K>
Json petri_to_json(const PetriSystemG5<K>& sys) {
  Json out{{"genus", 5}, {"field", field_to_json(sys.ring->field())}, {"rho", {{"123", scalar_json(sys.rho123, sys.ring)}}}};
  write_common<K>(out, sys.a_diag, sys.q, sys.alpha);
  return out;
}

template <class K>
Json petri_to_json(const PetriSystemG6<K>& sys) {
  Json out{{"genus", 6}, {"field", field_to_json(sys.ring->field())}};
  Json rho = Json::object();
  for (const auto& [t, v] : sys.rho) rho[join({t[0], t[1], t[2]}, false)] = scalar_json(v, sys.ring);
  out["rho"] = rho;
  write_common<K>(out, sys.a_diag, sys.q, sys.alpha);
  if (sys.b) {
    Json b = Json::object();
    for (const auto& [p, v] : *sys.b) b[join({p.first, p.second}, true)] = scalar_json(v, sys.ring);
    out["b"] = b;
  }
  return out;
}

#define CANONLAB_INSTANTIATE(K)                                         \
  template PetriSystemG5<K> load_petri_g5<K>(const PetriFile&);        \
  template PetriSystemG6<K> load_petri_g6<K>(const PetriFile&);        \
  template Json petri_to_json<K>(const PetriSystemG5<K>&);              \
  template Json petri_to_json<K>(const PetriSystemG6<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
