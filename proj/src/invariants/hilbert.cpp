#include "canonlab/invariants/hilbert.hpp"

#include <algorithm>
#include <map>

#include "canonlab/polyring/poly_io.hpp"

namespace canonlab {

namespace {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  return out;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(IntPoly a, const IntPoly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

bool is_pure_power(const Monomial& m) {
  int vars = 0;
  for (std::size_t i = 0; i < m.size(); ++i) vars += m[i] != 0;
  return vars <= 1;
}

std::string memo_key(const std::vector<Monomial>& gens) {
  std::string key;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      key.push_back(static_cast<char>(g[i] & 0xFF));
      key.push_back(static_cast<char>(g[i] >> 8));
    }
  }
  return key;
}

class Pivot {
 public:
  IntPoly run(std::vector<Monomial> gens) {
    gens = minimal_generators(std::move(gens));
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
      }
      return false;
    });
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};
    const std::string key = memo_key(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPoly result;
    const std::size_t n = gens.front().size();
    std::vector<int> count(n, 0);
    bool all_pure = true;
    for (const auto& g : gens) {
      if (is_pure_power(g)) continue;
      all_pure = false;
      for (std::size_t i = 0; i < n; ++i) count[i] += g[i] != 0;
    }
    if (all_pure) {
      result = {1};
      for (const auto& g : gens) {
        IntPoly factor(g.degree() + 1);
        factor[0] = 1;
        factor[g.degree()] -= 1;
        IntPoly prod(result.size() + factor.size() - 1);
        for (std::size_t i = 0; i < result.size(); ++i) {
          for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += result[i] * factor[j];
        }
        trim(prod);
        result = std::move(prod);
      }
    } else {
      const std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
      Monomial xm(n);
      xm.set(x, 1);
      std::vector<Monomial> plus = {xm};
      std::vector<Monomial> colon;
      for (const auto& g : gens) {
        if (g[x] == 0) plus.push_back(g);
        Monomial h = g;
        if (h[x] > 0) h.set(x, h[x] - 1);
        colon.push_back(h);
      }
      result = add(run(std::move(plus)), run(std::move(colon)), 1);
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::map<std::string, IntPoly> memo_;
};

mpz_class binomial(long long n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
  return r;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, MonomialOrder order, std::vector<Monomial> generators)
    : variables_(std::move(variables)), order_(std::move(order)), gens_(minimal_generators(std::move(generators))) {
  for (const auto& g : gens_) {
    if (g.size() != variables_.size()) throw std::invalid_argument("monomial ideal: generator length mismatch");
  }
  std::sort(gens_.begin(), gens_.end(), [this](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order_.greater(a, b);
  });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> MonomialIdeal::standard_monomials(unsigned d) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(nvars(), d, order_)) {
    if (!contains(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::string> MonomialIdeal::generator_texts() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(monomial_text(g, variables_));
  return out;
}

template <class K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& G) {
  return MonomialIdeal(G.ring()->variables(), G.order(), G.leading_monomials());
}

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I, const MonomialOrder& order) {
  if (I.is_zero()) return MonomialIdeal(I.ring()->variables(), order, {});
  return initial_ideal(buchberger(I, order));
}

IntPoly hilbert_series_numerator(const MonomialIdeal& M) {
  return Pivot().run(M.generators());
}

mpz_class hilbert_function(const IntPoly& numerator, std::size_t nvars, unsigned d) {
  mpz_class sum = 0;
  for (std::size_t i = 0; i < numerator.size() && i <= d; ++i) {
    if (nvars == 0) {
      if (i == d) sum += numerator[i];
      continue;
    }
    sum += numerator[i] * binomial(static_cast<long long>(d - i + nvars - 1), nvars - 1);
  }
  return sum;
}

Rational HilbertData::hp(long long t) const {
  Rational v = 0, pw = 1;
  for (const auto& c : hilbert_polynomial) {
    v += c * pw;
    pw *= static_cast<long>(t);
  }
  return v;
}

HilbertData hilbert_data(const MonomialIdeal& M) {
  HilbertData h;
  h.numerator = hilbert_series_numerator(M);
  IntPoly q = h.numerator;
  std::size_t cancelled = 0;
  auto value_at_one = [](const IntPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (!q.empty() && value_at_one(q) == 0) {
    IntPoly next(q.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      next[i] = acc;
    }
    trim(next);
    q = std::move(next);
    ++cancelled;
  }
  const long long krull = static_cast<long long>(M.nvars()) - static_cast<long long>(cancelled);
  if (q.empty() || krull <= 0) {
    h.proj_dimension = -1;
    h.degree = 0;
    h.regularity_index = static_cast<int>(h.numerator.size());
    return h;
  }
  h.proj_dimension = static_cast<int>(krull - 1);
  h.degree = value_at_one(q);
  // HP(t) = sum_i q_i * binom(t - i + krull - 1, krull - 1)
  const auto dk = static_cast<std::size_t>(krull);
  mpz_class fact = 1;
  for (std::size_t j = 2; j < dk; ++j) fact *= static_cast<unsigned long>(j);
  std::vector<Rational> hp(dk, Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    std::vector<Rational> prod = {Rational(1)};
    for (std::size_t j = 1; j < dk; ++j) {
      // multiply by (t + j - i)
      const Rational c = Rational(static_cast<long>(j) - static_cast<long>(i));
      std::vector<Rational> next(prod.size() + 1, Rational(0));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] += prod[k] * c;
      }
      prod = std::move(next);
    }
    for (std::size_t k = 0; k < prod.size(); ++k) hp[k] += Rational(q[i]) * prod[k] / Rational(fact);
  }
  for (auto& c : hp) c.canonicalize();
  while (!hp.empty() && sgn(hp.back()) == 0) hp.pop_back();
  h.hilbert_polynomial = std::move(hp);
  h.regularity_index = std::max(0, static_cast<int>(q.size()) - 1 - static_cast<int>(krull) + 1);
  const Rational pa = (h.proj_dimension % 2 == 0 ? 1 : -1) * (h.hp(0) - 1);
  h.arithmetic_genus = mpz_class(pa.get_num() / pa.get_den());
  return h;
}

template <class K>
HilbertData hilbert_data(const Ideal<K>& I) {
  return hilbert_data(initial_ideal(I));
}

std::string univariate_text(const std::vector<Rational>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mag = FieldTraits<Rational>::abs_text(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string univariate_text(const IntPoly& coeffs, const std::string& var) {
  std::vector<Rational> r;
  for (const auto& c : coeffs) r.emplace_back(c);
  return univariate_text(r, var);
}

template MonomialIdeal initial_ideal<Rational>(const GroebnerBasis<Rational>&);
template MonomialIdeal initial_ideal<Zp>(const GroebnerBasis<Zp>&);
template MonomialIdeal initial_ideal<Rational>(const Ideal<Rational>&, const MonomialOrder&);
template MonomialIdeal initial_ideal<Zp>(const Ideal<Zp>&, const MonomialOrder&);
template HilbertData hilbert_data<Rational>(const Ideal<Rational>&);
template HilbertData hilbert_data<Zp>(const Ideal<Zp>&);

}  // namespace canonlab
