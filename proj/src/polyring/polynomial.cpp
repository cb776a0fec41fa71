#include "canonlab/polyring/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace canonlab {

std::vector<std::string> canonical_variables(int genus) {
  if (genus != 5 && genus != 6) throw std::invalid_argument("genus must be 5 or 6");
  std::vector<std::string> v;
  for (int i = 1; i <= genus - 1; ++i) v.push_back("x" + std::to_string(i));
  v.push_back("x0");
  return v;
}

template <class K>
PolyRing<K>::PolyRing(std::vector<std::string> variables, FieldSpec field, MonomialOrder order)
    : names_(std::move(variables)), field_(field), order_(std::move(order)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVariables) + ")");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be unique");
  if (field_.kind != FieldTraits<K>::kind) {
    throw std::invalid_argument("field " + field_.name() + " does not match the coefficient type");
  }
  if (field_.is_prime_field() && !is_prime(field_.p)) {
    throw std::invalid_argument("field characteristic is not prime");
  }
}

template <class K>
std::optional<std::size_t> PolyRing<K>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

template <class K>
std::size_t PolyRing<K>::index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

template <class K>
void require_same_ring(const Ring<K>& a, const Ring<K>& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("mismatched rings");
}

template <class K>
void Polynomial<K>::require_same_ring(const Polynomial& o) const {
  canonlab::require_same_ring(ring_, o.ring_);
}

template <class K>
Polynomial<K> Polynomial<K>::constant(const Ring<K>& ring, const K& c) {
  return monomial(ring, c, Monomial(ring->nvars()));
}

template <class K>
Polynomial<K> Polynomial<K>::variable(const Ring<K>& ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(ring, ring->one(), m);
}

template <class K>
Polynomial<K> Polynomial<K>::variable(const Ring<K>& ring, std::string_view name) {
  return variable(ring, ring->index(name));
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(const Ring<K>& ring, const K& c, const Monomial& m) {
  Polynomial p(ring);
  if (m.size() != ring->nvars()) throw std::invalid_argument("monomial does not match ring");
  if (!canonlab::is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(const Ring<K>& ring, std::vector<Term<K>> terms) {
  const MonomialOrder& order = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term<K>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) throw std::invalid_argument("monomial does not match ring");
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && canonlab::is_zero(out.back().coefficient)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && canonlab::is_zero(out.back().coefficient)) out.pop_back();
  return from_sorted_terms(ring, std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::from_sorted_terms(const Ring<K>& ring, std::vector<Term<K>> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

template <class K>
const Term<K>& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

template <class K>
std::optional<unsigned> Polynomial<K>::degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

template <class K>
bool Polynomial<K>::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term<K>& t) { return t.monomial[index] != 0; });
}

template <class K>
K Polynomial<K>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return ring_->zero();
}

template <class K>
Polynomial<K> Polynomial<K>::homogeneous_part(unsigned d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

template <class K>
K Polynomial<K>::evaluate(std::span<const K> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("point dimension mismatch");
  K sum = ring_->zero();
  for (const auto& t : terms_) {
    K v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (terms_.empty()) return *this;
  Polynomial p = *this;
  const K inv = ring_->one() / terms_.front().coefficient;
  for (auto& t : p.terms_) t.coefficient *= inv;
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

template <class K>
Polynomial<K>& Polynomial<K>::add_scaled(const K& c, const Monomial& m, const Polynomial& g) {
  if (!ring_) ring_ = g.ring_;
  require_same_ring(g);
  if (canonlab::is_zero(c) || g.terms_.empty()) return *this;
  const MonomialOrder& order = ring_->order();
  std::vector<Term<K>> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Monomial mb;
  bool have_b = false;
  auto load_b = [&] {
    have_b = b != g.terms_.end();
    if (have_b) mb = m * b->monomial;
  };
  load_b();
  while (a != terms_.end() || have_b) {
    if (!have_b) {
      out.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      out.push_back({c * b->coefficient, mb});
      ++b;
      load_b();
      continue;
    }
    const auto cmp = order.compare(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({c * b->coefficient, mb});
      ++b;
      load_b();
    } else {
      K s = a->coefficient + c * b->coefficient;
      if (!canonlab::is_zero(s)) out.push_back({std::move(s), mb});
      ++a;
      ++b;
      load_b();
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  return add_scaled(ring_->one(), Monomial(ring_->nvars()), o);
}

template <class K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  return add_scaled(-ring_->one(), Monomial(ring_->nvars()), o);
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const K& c) {
  if (canonlab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

template <class K>
Term<K> Polynomial<K>::pop_leading_term() {
  Term<K> t = leading_term();
  terms_.erase(terms_.begin());
  return t;
}

template <class K>
Polynomial<K> Polynomial<K>::times_term(const K& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (canonlab::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({c * t.coefficient, m * t.monomial});
  return p;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const Polynomial& o) {
  require_same_ring(o);
  std::vector<Term<K>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) prod.push_back({s.coefficient * t.coefficient, s.monomial * t.monomial});
  }
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

template <class K>
Polynomial<K> substitute_linear(const Polynomial<K>& f, std::span<const Polynomial<K>> images) {
  const auto& ring = f.ring();
  if (images.size() != ring->nvars()) throw std::invalid_argument("one image per variable required");
  const Ring<K>& target = images.empty() ? ring : images.front().ring();
  for (const auto& img : images) require_same_ring(img.ring(), target);
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial<K>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial<K>::constant(target, target->one()));
    while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  Polynomial<K> out(target);
  for (const auto& t : f.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    }
    out += term;
  }
  return out;
}

template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& f, const Ring<K>& target) {
  if (f.ring() == target) return f;
  if (!f.ring()) return Polynomial<K>(target);
  if (f.ring()->field() != target->field()) throw std::invalid_argument("map_to_ring: field mismatch");
  const auto& src = f.ring()->variables();
  std::vector<std::optional<std::size_t>> slot(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) slot[i] = target->index_of(src[i]);
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!slot[i]) throw std::invalid_argument("map_to_ring: variable " + src[i] + " missing in target");
      m.set(*slot[i], t.monomial[i]);
    }
    terms.push_back({t.coefficient, m});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

template <class K>
std::vector<Polynomial<K>> map_to_ring(std::span<const Polynomial<K>> fs, const Ring<K>& target) {
  std::vector<Polynomial<K>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(map_to_ring(f, target));
  return out;
}

template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& h) {
  require_same_ring(f.ring(), h.ring());
  if (h.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial<K> rest = f;
  std::vector<Term<K>> quotient;
  const K lc_inv = f.ring()->one() / h.leading_coefficient();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!h.leading_monomial().divides(lt.monomial)) throw std::domain_error("polynomial division is not exact");
    const K c = lt.coefficient * lc_inv;
    const Monomial m = lt.monomial / h.leading_monomial();
    quotient.push_back({c, m});
    rest.add_scaled(-c, m, h);
  }
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(quotient));
}

namespace {

void enumerate(std::size_t nvars, std::size_t i, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    cur.set(i, left);
    out.push_back(cur);
    cur.set(i, 0);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur.set(i, e);
    enumerate(nvars, i + 1, left - e, cur, out);
  }
  cur.set(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

#define CANONLAB_INSTANTIATE(K)                                                                   \
  template class PolyRing<K>;                                                                     \
  template class Polynomial<K>;                                                                   \
  template void require_same_ring<K>(const Ring<K>&, const Ring<K>&);                             \
  template Polynomial<K> substitute_linear<K>(const Polynomial<K>&, std::span<const Polynomial<K>>); \
  template Polynomial<K> map_to_ring<K>(const Polynomial<K>&, const Ring<K>&);                    \
  template std::vector<Polynomial<K>> map_to_ring<K>(std::span<const Polynomial<K>>, const Ring<K>&); \
  template Polynomial<K> divide_exact<K>(const Polynomial<K>&, const Polynomial<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
