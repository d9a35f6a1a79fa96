#include "thetablocks/cyclo.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "thetablocks/error.hpp"
#include "thetablocks/numtheory.hpp"

namespace thetablocks {
namespace {

struct Basis {
  std::uint64_t n = 1;
  std::size_t phi = 1;
  std::vector<long> poly;                // Phi_n, low to high, monic
  std::vector<std::vector<long>> powers;  // zeta^k reduced, 0 <= k < n
};

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

int moebius(std::uint64_t n) {
  int m = 1;
  for (auto [p, e] : nt::factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

std::unique_ptr<Basis> build_basis(std::uint64_t n) {
  auto b = std::make_unique<Basis>();
  b->n = n;
  std::vector<long> num{1}, den{1};
  for (std::uint64_t d : nt::divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    std::vector<long> xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    if (mu == 1)
      num = poly_mul(num, xd);
    else
      den = poly_mul(den, xd);
  }
  // den is monic up to sign (-1)^k; make it monic before dividing.
  if (den.back() < 0) {
    for (auto& c : den) c = -c;
    for (auto& c : num) c = -c;
  }
  b->poly = poly_div_exact(num, den);
  b->phi = b->poly.size() - 1;
  b->powers.assign(n, std::vector<long>(b->phi, 0));
  std::vector<long> cur(b->phi, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    b->powers[k] = cur;
    // multiply by x and reduce modulo the monic Phi_n
    long top = cur[b->phi - 1];
    for (std::size_t i = b->phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * b->poly[i];
    cur[0] = -top * b->poly[0];
  }
  return b;
}

const Basis& basis(std::uint64_t n) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::unique_ptr<Basis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_basis(n)).first;
  return *it->second;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

void add_power(std::vector<Rational>& acc, const Basis& b, std::uint64_t k, const Rational& c) {
  const auto& row = b.powers[k % b.n];
  for (std::size_t i = 0; i < b.phi; ++i)
    if (row[i] != 0) acc[i] += c * row[i];
}

// Solves A x = rhs over Q; A is rows x cols. Returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> rhs) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

CycNum::CycNum() : n_(1), c_{Rational(0)} {}
CycNum::CycNum(long value) : n_(1), c_{Rational(value)} {}
CycNum::CycNum(const Rational& value) : n_(1), c_{value} {}

CycNum::CycNum(std::uint64_t n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { normalize(); }

void CycNum::normalize() {
  for (auto& x : c_) x.canonicalize();
  if (n_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  c_.resize(1);
  n_ = 1;
}

CycNum CycNum::root_of_unity(std::uint64_t n, std::int64_t e) {
  if (n == 0) throw Error(ErrorKind::MalformedInput, "root of unity of order 0");
  const Basis& b = basis(n);
  std::vector<Rational> c(b.phi, 0);
  add_power(c, b, static_cast<std::uint64_t>(nt::mod(e, static_cast<std::int64_t>(n))), 1);
  return CycNum(n, std::move(c));
}

CycNum CycNum::from_exponents(std::uint64_t n, const std::map<std::int64_t, Rational>& terms) {
  if (n == 0) throw Error(ErrorKind::MalformedInput, "conductor 0");
  const Basis& b = basis(n);
  std::vector<Rational> c(b.phi, 0);
  for (const auto& [e, q] : terms)
    add_power(c, b, static_cast<std::uint64_t>(nt::mod(e, static_cast<std::int64_t>(n))), q);
  return CycNum(n, std::move(c));
}

CycNum CycNum::from_power_basis(std::uint64_t n, std::vector<Rational> coeffs) {
  if (n == 0 || coeffs.size() != basis(n).phi)
    throw Error(ErrorKind::MalformedInput, "power basis length does not match phi(n)");
  return CycNum(n, std::move(coeffs));
}

bool CycNum::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool CycNum::is_one() const { return n_ == 1 && c_[0] == 1; }

std::optional<Rational> CycNum::to_rational() const {
  if (n_ == 1) return c_[0];
  return std::nullopt;
}

bool CycNum::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

CycNum CycNum::raw_at(std::uint64_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0)
    throw Error(ErrorKind::ConductorMismatch,
                "conductor " + std::to_string(m) + " is not a multiple of " + std::to_string(n_));
  const Basis& b = basis(m);
  std::vector<Rational> c(b.phi, 0);
  std::uint64_t step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_power(c, b, i * step, c_[i]);
  CycNum r;
  r.n_ = m;
  r.c_ = std::move(c);
  return r;  // unnormalized; only c_ is read by callers
}

std::vector<Rational> CycNum::coeffs_at(std::uint64_t m) const { return raw_at(m).c_; }

CycNum CycNum::minimized() const {
  if (n_ == 1) return *this;
  const Basis& big = basis(n_);
  for (std::uint64_t d : nt::divisors(n_)) {
    if (d == 1 || d == n_ || d % 4 == 2) continue;
    const Basis& small = basis(d);
    std::vector<std::vector<Rational>> a(big.phi, std::vector<Rational>(small.phi, 0));
    for (std::size_t j = 0; j < small.phi; ++j) {
      const auto& col = big.powers[j * (n_ / d)];
      for (std::size_t i = 0; i < big.phi; ++i) a[i][j] = col[i];
    }
    if (auto x = solve_rational(std::move(a), c_)) return CycNum(d, std::move(*x));
  }
  return *this;
}

CycNum CycNum::galois(std::int64_t k) const {
  if (n_ == 1) return *this;
  if (std::gcd(static_cast<std::uint64_t>(nt::mod(k, static_cast<std::int64_t>(n_))), n_) != 1)
    throw Error(ErrorKind::MalformedInput, "Galois exponent not coprime to conductor");
  const Basis& b = basis(n_);
  std::vector<Rational> c(b.phi, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      add_power(c, b,
                static_cast<std::uint64_t>(
                    nt::mod(static_cast<std::int64_t>(i) * k, static_cast<std::int64_t>(n_))),
                c_[i]);
  return CycNum(n_, std::move(c));
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (n_ == 1) return CycNum(Rational(1 / c_[0]));
  const Basis& b = basis(n_);
  // Column j of the multiplication matrix is this * zeta^j.
  std::vector<std::vector<Rational>> a(b.phi, std::vector<Rational>(b.phi, 0));
  for (std::size_t j = 0; j < b.phi; ++j) {
    CycNum col = *this * CycNum::root_of_unity(n_, static_cast<std::int64_t>(j));
    CycNum full = col.raw_at(n_);
    for (std::size_t i = 0; i < b.phi; ++i) a[i][j] = full.c_[i];
  }
  std::vector<Rational> rhs(b.phi, 0);
  rhs[0] = 1;
  auto x = solve_rational(std::move(a), std::move(rhs));
  if (!x) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
  return CycNum(n_, std::move(*x));
}

CycNum CycNum::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum result(1L), base = *this;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::optional<RootOfUnity> CycNum::as_root_of_unity() const {
  if (n_ == 1) {
    if (c_[0] == 1) return RootOfUnity{1, 0};
    if (c_[0] == -1) return RootOfUnity{2, 1};
    return std::nullopt;
  }
  const Basis& b = basis(n_);
  for (std::uint64_t k = 0; k < n_; ++k) {
    const auto& row = b.powers[k];
    bool pos = true, neg = true;
    for (std::size_t i = 0; i < b.phi && (pos || neg); ++i) {
      if (c_[i] != row[i]) pos = false;
      if (c_[i] != -row[i]) neg = false;
    }
    std::uint64_t order = n_, e = k;
    if (!pos && neg) {
      order = 2 * n_;
      e = 2 * k + n_;
    } else if (!pos) {
      continue;
    }
    std::uint64_t g = std::gcd(order, e % order);
    if (e % order == 0) return RootOfUnity{1, 0};
    return RootOfUnity{order / g, (e % order) / g};
  }
  return std::nullopt;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
    z += c_[i].get_d() * std::polar(1.0, ang);
  }
  return z;
}

std::string CycNum::str() const {
  CycNum m = minimized();
  if (m.n_ == 1) return m.c_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.c_.size(); ++i) {
    Rational c = m.c_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << a.get_str();
      continue;
    }
    if (a != 1) out << a.get_str() << "*";
    out << "z" << m.n_;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    std::uint64_t l = lcm(n_, o.n_);
    CycNum a = raw_at(l), b = o.raw_at(l);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ == 1) {
    for (auto& q : c_) q *= o.c_[0];
    normalize();
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    normalize();
    return *this;
  }
  std::uint64_t l = lcm(n_, o.n_);
  CycNum a = raw_at(l), b = o.raw_at(l);
  const Basis& bs = basis(l);
  std::vector<Rational> prod(2 * bs.phi - 1, 0);
  for (std::size_t i = 0; i < bs.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < bs.phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(bs.phi));
  for (std::size_t k = bs.phi; k < prod.size(); ++k)
    if (prod[k] != 0) add_power(c, bs, k, prod[k]);
  n_ = l;
  c_ = std::move(c);
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  std::uint64_t l = lcm(a.n_, b.n_);
  return a.raw_at(l).c_ == b.raw_at(l).c_;
}

int CycNum::compare_at(const CycNum& a, const CycNum& b, std::uint64_t n) {
  CycNum x = a.raw_at(n), y = b.raw_at(n);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace cyclo {

const std::vector<long>& cyclotomic_polynomial(std::uint64_t n) { return basis(n).poly; }

const std::vector<long>& power_of_zeta(std::uint64_t n, std::uint64_t k) {
  return basis(n).powers[k % n];
}

namespace {

CycNum sqrt_prime(std::uint64_t p) {
  if (p == 2) return CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, 7);
  std::map<std::int64_t, Rational> terms;
  for (std::uint64_t a = 1; a < p; ++a) {
    bool residue = nt::powmod(a, (p - 1) / 2, p) == 1;
    terms[static_cast<std::int64_t>(a)] = residue ? 1 : -1;
  }
  CycNum g = CycNum::from_exponents(p, terms);
  if (p % 4 == 3) g = -CycNum::root_of_unity(4, 1) * g;
  if (g.approx().real() < 0) g = -g;
  return g;
}

std::uint64_t to_u64(const Integer& z) {
  if (!z.fits_ulong_p()) throw Error(ErrorKind::MalformedInput, "radicand too large");
  return z.get_ui();
}

}  // namespace

CycNum sqrt_rational(const Rational& r) {
  if (r < 0) throw Error(ErrorKind::MalformedInput, "square root of a negative rational");
  if (r == 0) return CycNum(0L);
  Integer num = r.get_num(), den = r.get_den();
  Integer prod = num * den;
  std::uint64_t m = to_u64(prod);
  Rational outside = Rational(1) / Rational(den);
  CycNum inside(1L);
  for (auto [p, e] : nt::factorize(m)) {
    for (unsigned i = 0; i < e / 2; ++i) outside *= static_cast<long>(p);
    if (e % 2) inside *= sqrt_prime(p);
  }
  return inside * CycNum(outside);
}

std::optional<CycNum> cyclotomic_root(const CycNum& x, unsigned f) {
  if (f == 0) return std::nullopt;
  if (f == 1) return x;
  if (x.is_zero()) return std::nullopt;
  auto norm = (x * x.conj()).to_rational();
  if (!norm || *norm <= 0) return std::nullopt;
  Integer num = norm->get_num(), den = norm->get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational q(sn, sd);
  q.canonicalize();
  auto unit = (x * CycNum(Rational(1 / q))).as_root_of_unity();
  if (!unit) return std::nullopt;
  // q^(2/f) must be rational for q^(1/f) to be a rational times square roots.
  Rational q2(1);
  auto scan = [&](const Integer& z, int sign) -> bool {
    for (auto [p, e] : nt::factorize(to_u64(z))) {
      if ((2 * e) % f != 0) return false;
      long k = static_cast<long>(2 * e / f);
      for (long i = 0; i < k; ++i) {
        if (sign > 0)
          q2 *= static_cast<long>(p);
        else
          q2 /= static_cast<long>(p);
      }
    }
    return true;
  };
  if (!scan(q.get_num(), 1) || !scan(q.get_den(), -1)) return std::nullopt;
  CycNum root = sqrt_rational(q2) *
                CycNum::root_of_unity(unit->order * f, static_cast<std::int64_t>(unit->exponent));
  if (root.pow(f) != x) return std::nullopt;
  return root;
}

}  // namespace cyclo
}  // namespace thetablocks
