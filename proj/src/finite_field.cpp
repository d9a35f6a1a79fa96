#include "thetablocks/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {
namespace {

using Poly = std::vector<unsigned>;

// Product of two residues (length f) modulo the monic modulus.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
  std::size_t f = modulus.size() - 1;
  std::vector<unsigned long> prod(2 * f - 1 + (f == 0), 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > f;) {
    unsigned long c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < f; ++j)
      prod[k - f + j] = (prod[k - f + j] + c * (p - modulus[j])) % p;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(f));
}

std::uint32_t encode(const Poly& c, unsigned p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

Poly decode(std::uint32_t v, unsigned p, unsigned f) {
  Poly c(f, 0);
  for (unsigned i = 0; i < f; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

// Dense polynomials over F_p, low to high, trimmed of leading zeros.
void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& g, unsigned p) {
  trim(a);
  std::size_t dg = g.size() - 1;
  unsigned lead_inv = static_cast<unsigned>(nt::invmod(g.back(), p));
  while (a.size() > dg) {
    unsigned c = static_cast<unsigned>(static_cast<unsigned long>(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) a[shift + j] = (a[shift + j] + (p - c) * static_cast<unsigned long>(g[j]) % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulrem(const Poly& a, const Poly& b, const Poly& g, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p;
  return poly_rem(std::move(r), g, p);
}

Poly poly_powrem(Poly base, std::uint64_t e, const Poly& g, unsigned p) {
  Poly r{1};
  base = poly_rem(std::move(base), g, p);
  while (e) {
    if (e & 1) r = poly_mulrem(r, base, g, p);
    base = poly_mulrem(base, base, g, p);
    e >>= 1;
  }
  return r;
}

std::size_t poly_gcd_degree(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Ben-Or: g of degree f is irreducible iff gcd(x^(p^i) - x, g) = 1 for i <= f/2.
bool is_irreducible(const Poly& g, unsigned p) {
  std::size_t f = g.size() - 1;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= f / 2; ++i) {
    h = poly_powrem(h, p, g, p);
    Poly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (poly_gcd_degree(d, g, p) != 0) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, std::vector<unsigned> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::MalformedInput, "field characteristic is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw Error(ErrorKind::MalformedInput, "field modulus must be monic of degree >= 1");
  f_ = static_cast<unsigned>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f_; ++i) {
    q *= p;
    if (q > (1u << 22)) throw Error(ErrorKind::MalformedInput, "field too large for table arithmetic");
  }
  q_ = static_cast<std::uint32_t>(q);
  for (auto& c : modulus_) c %= p;
  if (!is_irreducible(modulus_, p_)) throw Error(ErrorKind::MalformedInput, "field modulus is not irreducible");

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Poly one(f_, 0);
  one[0] = 1;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    Poly g = decode(cand, p_, f_);
    Poly cur = one;
    std::uint32_t k = 0;
    bool primitive = true;
    std::vector<std::uint32_t> powers;
    powers.reserve(q_ - 1);
    do {
      powers.push_back(encode(cur, p_));
      cur = mulmod(cur, g, modulus_, p_);
      ++k;
      if (cur == one && k < q_ - 1) {
        primitive = false;
        break;
      }
    } while (k < q_ - 1);
    if (!primitive || cur != one) continue;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = exp_[i + q_ - 1] = powers[i];
      log_[powers[i]] = i;
    }
    minus_one_ = from_int(static_cast<long>(p_) - 1);
    if (p_ != 2 && f_ > 1 && q_ <= 1024) {
      std::vector<Elem> table(static_cast<std::size_t>(q_) * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) table[static_cast<std::size_t>(a) * q_ + b] = add(a, b);
      add_table_ = std::move(table);
    }
    return;
  }
  throw Error(ErrorKind::MalformedInput, "field modulus is not irreducible");
}

FiniteField FiniteField::prime_field(unsigned p) { return FiniteField(p, {0, 1}); }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (f_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Elem r = 0, scale = 1;
  while (a || b) {
    Elem d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  return mul(a, minus_one_);
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  std::int64_t e = nt::mod(static_cast<std::int64_t>(log_[a]) * (k % static_cast<std::int64_t>(q_ - 1)),
                           static_cast<std::int64_t>(q_ - 1));
  return exp_[static_cast<std::size_t>(e)];
}

FiniteField::Elem FiniteField::from_int(long v) const {
  return static_cast<Elem>(nt::mod(v, static_cast<std::int64_t>(p_)));
}

FiniteField::Elem FiniteField::generator_x() const {
  if (f_ == 1) return from_int(-static_cast<long>(modulus_[0]));
  return p_;
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[a];
}

std::vector<unsigned> FiniteField::coefficients(Elem a) const { return decode(a, p_, f_); }

FiniteField::Elem FiniteField::from_coefficients(const std::vector<unsigned>& c) const {
  Poly r(f_, 0);
  for (std::size_t i = 0; i < c.size() && i < f_; ++i) r[i] = c[i] % p_;
  return encode(r, p_);
}

std::string FiniteField::str(Elem a) const {
  auto c = coefficients(a);
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << "]";
  return out.str();
}

std::vector<unsigned> FiniteField::smallest_irreducible(unsigned p, unsigned f) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < f; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly c = decode(static_cast<std::uint32_t>(v), p, f);
    c.push_back(1);
    if (f == 1) return c;
    if (c[0] != 0 && is_irreducible(c, p)) return c;
  }
  throw Error(ErrorKind::MalformedInput, "no irreducible polynomial found");
}

// ----------------------------------------------------------------------------

IdealReduction::IdealReduction(unsigned p, std::uint64_t n, IdealChoice choice)
    : p_(p), n_(n), choice_(choice) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::MalformedInput, "p is not prime");
  if (n == 0) throw Error(ErrorKind::MalformedInput, "conductor 0");
  a_ = nt::valuation(n, p);
  m_ = n / nt::p_part(n, p);
  unsigned f = m_ == 1 ? 1 : static_cast<unsigned>(nt::multiplicative_order(p % m_, m_));

  FiniteField big(p, FiniteField::smallest_irreducible(p, f));
  FiniteField::Elem omega = big.exp((big.size() - 1) / m_);
  std::vector<bool> seen(m_, false);
  for (std::uint64_t k = 0; k < m_; ++k) {
    if (seen[k] || std::gcd(k, m_) != 1) continue;
    // minimal polynomial of omega^k over F_p: product over the Frobenius orbit
    std::vector<FiniteField::Elem> poly{1};
    std::uint64_t e = k;
    for (unsigned i = 0; i < f; ++i) {
      seen[e] = true;
      FiniteField::Elem r = big.pow(omega, static_cast<std::int64_t>(e));
      std::vector<FiniteField::Elem> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = big.add(next[j + 1], poly[j]);
        next[j] = big.sub(next[j], big.mul(r, poly[j]));
      }
      poly = std::move(next);
      e = e * p % m_;
    }
    std::vector<unsigned> coeffs;
    for (auto c : poly) {
      if (c >= p) throw Error(ErrorKind::MalformedInput, "cyclotomic factor not defined over F_p");
      coeffs.push_back(c);
    }
    factors_.push_back(std::move(coeffs));
  }
  std::sort(factors_.begin(), factors_.end());
  factors_.erase(std::unique(factors_.begin(), factors_.end()), factors_.end());
  if (choice.factor >= factors_.size() || choice.root >= f)
    throw Error(ErrorKind::MalformedInput, "ideal choice out of range");

  field_ = std::make_shared<const FiniteField>(p, factors_[choice.factor]);
  const FiniteField& F = *field_;
  std::vector<FiniteField::Elem> roots;
  FiniteField::Elem x = F.generator_x();
  for (unsigned j = 0; j < f; ++j) {
    roots.push_back(x);
    x = F.pow(x, p);
  }
  std::sort(roots.begin(), roots.end());
  root_ = roots[choice.root];

  std::uint64_t pa = nt::p_part(n, p);
  std::uint64_t v = m_ == 1 ? 0 : nt::invmod(static_cast<std::int64_t>(pa % m_), m_);
  zeta_n_image_ = F.pow(root_, static_cast<std::int64_t>(v));

  root_log_.assign(F.size(), -1);
  FiniteField::Elem r = 1;
  for (std::uint64_t k = 0; k < m_; ++k) {
    root_log_[r] = static_cast<long>(k);
    r = F.mul(r, root_);
  }
}

FiniteField::Elem IdealReduction::reduce(const CycNum& a) const {
  CycNum x = a;
  if (n_ % x.conductor() != 0) x = x.minimized();
  if (n_ % x.conductor() != 0)
    throw Error(ErrorKind::ConductorMismatch, "value of conductor " + std::to_string(x.conductor()) +
                                                  " cannot be reduced at conductor " + std::to_string(n_));
  const FiniteField& F = *field_;
  auto coeffs = x.coeffs_at(n_);
  FiniteField::Elem acc = 0, zpow = 1;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) throw Error(ErrorKind::NotAlgebraicInteger, "value " + a.str() + " is not integral");
    if (c != 0) {
      Integer r = c.get_num() % static_cast<unsigned long>(p_);
      long rv = r.get_si();
      acc = F.add(acc, F.mul(F.from_int(rv), zpow));
    }
    zpow = F.mul(zpow, zeta_n_image_);
  }
  return acc;
}

long IdealReduction::lift_exponent(FiniteField::Elem x) const {
  if (x >= root_log_.size()) return -1;
  return root_log_[x];
}

std::vector<IdealChoice> IdealReduction::all_choices(unsigned p, std::uint64_t n) {
  IdealReduction base(p, n);
  std::vector<IdealChoice> out;
  for (unsigned i = 0; i < base.factors_.size(); ++i)
    for (unsigned j = 0; j < base.field_->degree(); ++j) out.push_back({i, j});
  return out;
}

}  // namespace thetablocks
