#include "legh/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

#include "legh/error.hpp"

namespace legh {

namespace {

constexpr std::size_t kMaxVariables = 16;

unsigned bits_for(std::size_t nvars) {
  if (nvars == 0) return 0;
  return static_cast<unsigned>(std::min<std::size_t>(32, 64 / nvars));
}

std::size_t bit_length(const BigInt& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.size() > kMaxVariables) {
    throw Error(ErrorCode::InvalidInput, "IntPolynomial supports at most 16 variables");
  }
  bits_ = bits_for(vars_.size());
  field_mask_ = bits_ == 0 ? 0 : (bits_ == 32 ? 0xffffffffu : ((1u << bits_) - 1u));
}

IntPolynomial IntPolynomial::constant(std::vector<std::string> variables, const BigInt& c) {
  IntPolynomial p(std::move(variables));
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

IntPolynomial IntPolynomial::variable(std::vector<std::string> variables, std::size_t index) {
  IntPolynomial p(std::move(variables));
  if (index >= p.arity()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  Exponents e(p.arity(), 0);
  e[index] = 1;
  p.terms_.push_back({p.pack(e), BigInt(1)});
  return p;
}

IntPolynomial IntPolynomial::from_terms(std::vector<std::string> variables,
                                        const std::vector<std::pair<Exponents, BigInt>>& terms) {
  IntPolynomial p(std::move(variables));
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

std::uint64_t IntPolynomial::pack(std::span<const std::uint32_t> exps) const {
  if (exps.size() != vars_.size()) throw Error(ErrorCode::ArityMismatch, "exponent vector length mismatch");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > field_mask_) throw Error(ErrorCode::InvalidInput, "exponent exceeds packed field width");
    key = (bits_ == 64 ? 0 : key << bits_) | exps[i];
  }
  return key;
}

IntPolynomial::Exponents IntPolynomial::exponents(std::uint64_t key) const {
  Exponents e(vars_.size(), 0);
  for (std::size_t i = vars_.size(); i-- > 0;) {
    e[i] = static_cast<std::uint32_t>(key & field_mask_);
    key >>= bits_;
  }
  return e;
}

BigInt IntPolynomial::coefficient(std::span<const std::uint32_t> exps) const {
  const auto key = pack(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return 0;
}

void IntPolynomial::add_term(std::span<const std::uint32_t> exps, const BigInt& c) {
  if (c == 0) return;
  const auto key = pack(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{key, c});
  }
}

std::vector<long> IntPolynomial::degree_per_variable() const {
  std::vector<long> deg(vars_.size(), terms_.empty() ? -1 : 0);
  for (const auto& t : terms_) {
    const auto e = exponents(t.key);
    for (std::size_t i = 0; i < e.size(); ++i) deg[i] = std::max<long>(deg[i], e[i]);
  }
  return deg;
}

long IntPolynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) {
    long s = 0;
    for (auto x : exponents(t.key)) s += x;
    d = std::max(d, s);
  }
  return d;
}

long IntPolynomial::degree_in(std::size_t var) const {
  if (var >= vars_.size()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  return degree_per_variable()[var];
}

std::optional<std::pair<long, long>> IntPolynomial::degree_range(std::span<const std::size_t> subset) const {
  if (terms_.empty()) return std::nullopt;
  long lo = std::numeric_limits<long>::max();
  long hi = std::numeric_limits<long>::min();
  for (const auto& t : terms_) {
    const auto e = exponents(t.key);
    long s = 0;
    for (auto v : subset) {
      if (v >= e.size()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
      s += e[v];
    }
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return std::make_pair(lo, hi);
}

std::optional<long> IntPolynomial::homogeneous_degree(std::span<const std::size_t> subset) const {
  const auto r = degree_range(subset);
  if (!r || r->first != r->second) return std::nullopt;
  return r->first;
}

namespace {

template <class Scalar>
Scalar eval_impl(const IntPolynomial& p, std::span<const Scalar> args) {
  if (args.size() != p.arity()) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(p.arity()) + " arguments, got " +
                                              std::to_string(args.size()));
  }
  std::vector<std::vector<Scalar>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const long d = p.is_zero() ? 0 : p.degree_in(i);
    powers[i].reserve(static_cast<std::size_t>(d) + 1);
    powers[i].emplace_back(1);
    for (long k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * args[i]);
  }
  Scalar sum = 0;
  for (const auto& t : p.raw_terms()) {
    Scalar term = t.coeff;
    const auto e = p.exponents(t.key);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

BigRational IntPolynomial::eval(std::span<const BigRational> args) const {
  BigRational v = eval_impl<BigRational>(*this, args);
  v.canonicalize();
  return v;
}

BigInt IntPolynomial::eval(std::span<const BigInt> args) const { return eval_impl<BigInt>(*this, args); }

void IntPolynomial::require_same_variables(const IntPolynomial& o) const {
  if (vars_ != o.vars_) throw Error(ErrorCode::ArityMismatch, "polynomials over different variable lists");
}

void IntPolynomial::combine(const IntPolynomial& o, int sign) {
  require_same_variables(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      out.push_back({b->key, sign > 0 ? b->coeff : BigInt(-b->coeff)});
      ++b;
    } else {
      BigInt c = sign > 0 ? BigInt(a->coeff + b->coeff) : BigInt(a->coeff - b->coeff);
      if (c != 0) out.push_back({a->key, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  combine(o, 1);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  combine(o, -1);
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

IntPolynomial IntPolynomial::scaled(const BigInt& c) const {
  IntPolynomial r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

IntPolynomial schoolbook_multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  std::unordered_map<std::uint64_t, BigInt> acc;
  acc.reserve(std::min<std::size_t>(a.term_count() * b.term_count(), std::size_t{1} << 22));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto& slot = acc[x.key + y.key];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c != 0) r.terms_.push_back({k, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& s, const auto& t) { return s.key < t.key; });
  return r;
}

namespace {

// Bit buffer used for Kronecker packing; little-endian 64-bit limbs.
struct BitBuffer {
  std::vector<mp_limb_t> limbs;

  explicit BitBuffer(std::size_t bits) : limbs((bits + 63) / 64 + 1, 0) {}

  // ORs |v| (which must fit in the slot) at the given bit offset.
  void write(std::size_t offset, const BigInt& v) {
    const std::size_t n = mpz_size(v.get_mpz_t());
    const std::size_t word = offset / 64;
    const unsigned shift = offset % 64;
    for (std::size_t i = 0; i < n; ++i) {
      const mp_limb_t l = mpz_getlimbn(v.get_mpz_t(), static_cast<mp_size_t>(i));
      limbs[word + i] |= l << shift;
      if (shift) limbs[word + i + 1] |= l >> (64 - shift);
    }
  }

  BigInt to_int() const {
    BigInt out;
    mpz_import(out.get_mpz_t(), limbs.size(), -1, sizeof(mp_limb_t), 0, 0, limbs.data());
    return out;
  }
};

// Reads `count` bits starting at `offset` from a limb array.
BigInt read_bits(const mp_limb_t* data, std::size_t nlimbs, std::size_t offset, std::size_t count) {
  const std::size_t out_limbs = (count + 63) / 64;
  std::vector<mp_limb_t> buf(out_limbs, 0);
  const std::size_t word = offset / 64;
  const unsigned shift = offset % 64;
  for (std::size_t i = 0; i < out_limbs; ++i) {
    const std::size_t w = word + i;
    mp_limb_t lo = w < nlimbs ? data[w] : 0;
    mp_limb_t hi = (w + 1) < nlimbs ? data[w + 1] : 0;
    buf[i] = shift ? ((lo >> shift) | (hi << (64 - shift))) : lo;
  }
  const unsigned tail = count % 64;
  if (tail) buf.back() &= (mp_limb_t{1} << tail) - 1;
  BigInt out;
  mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return out;
}

}  // namespace

// Multiplication by Kronecker substitution: pack each polynomial into one
// big integer with k-bit slots in mixed radix over the per-variable degree
// bounds, multiply with GMP, unpack with balanced signed digits.
IntPolynomial kronecker_multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.arity();
  const auto da = a.degree_per_variable();
  const auto db = b.degree_per_variable();
  std::vector<std::size_t> radix(n), stride(n);
  std::size_t slots = 1;
  for (std::size_t i = n; i-- > 0;) {
    radix[i] = static_cast<std::size_t>(da[i] + db[i] + 1);
    stride[i] = slots;
    slots *= radix[i];
  }
  std::size_t max_a = 0, max_b = 0;
  for (const auto& t : a.terms_) max_a = std::max(max_a, bit_length(t.coeff));
  for (const auto& t : b.terms_) max_b = std::max(max_b, bit_length(t.coeff));
  const std::size_t fan = std::bit_width(std::min(a.term_count(), b.term_count()));
  const std::size_t k = max_a + max_b + fan + 2;

  auto slot_of = [&](const IntPolynomial& p, std::uint64_t key) {
    const auto e = p.exponents(key);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx += e[i] * stride[i];
    return idx;
  };
  auto pack = [&](const IntPolynomial& p) {
    BitBuffer pos(slots * k), neg(slots * k);
    for (const auto& t : p.terms_) {
      const std::size_t off = slot_of(p, t.key) * k;
      if (t.coeff > 0) {
        pos.write(off, t.coeff);
      } else {
        neg.write(off, BigInt(-t.coeff));
      }
    }
    return BigInt(pos.to_int() - neg.to_int());
  };

  const BigInt product = pack(a) * pack(b);
  const bool negative = product < 0;
  const BigInt mag = abs(product);
  const mp_limb_t* data = mpz_limbs_read(mag.get_mpz_t());
  const std::size_t nlimbs = mpz_size(mag.get_mpz_t());

  BigInt half = 1;
  half <<= static_cast<mp_bitcnt_t>(k - 1);
  BigInt full = half * 2;
  int carry = 0;
  std::vector<std::uint32_t> e(n);
  for (std::size_t s = 0; s < slots; ++s) {
    BigInt digit = read_bits(data, nlimbs, s * k, k);
    if (carry) digit += carry;
    carry = 0;
    if (digit >= half) {
      digit -= full;
      carry = 1;
    }
    if (digit == 0) continue;
    std::size_t rem = s;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<std::uint32_t>(rem / stride[i]);
      rem %= stride[i];
    }
    r.terms_.push_back({r.pack(e), negative ? BigInt(-digit) : digit});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& s, const auto& t) { return s.key < t.key; });
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.require_same_variables(b);
  if (a.is_zero() || b.is_zero()) return IntPolynomial(a.vars_);
  const auto da = a.degree_per_variable();
  const auto db = b.degree_per_variable();
  double slots = 1;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (static_cast<std::uint64_t>(da[i] + db[i]) > a.field_mask_) {
      throw Error(ErrorCode::InvalidInput, "product exponent exceeds packed field width");
    }
    slots *= static_cast<double>(da[i] + db[i] + 1);
  }
  const double pairs = static_cast<double>(a.term_count()) * static_cast<double>(b.term_count());
  // Kronecker pays off once the pairwise work dwarfs the packed size.
  if (pairs > 4e5 && slots * 256 < pairs * 64 && slots < 4e8) return kronecker_multiply(a, b);
  return schoolbook_multiply(a, b);
}

IntPolynomial IntPolynomial::pow(unsigned n) const {
  IntPolynomial result = constant(vars_, 1);
  IntPolynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto e = exponents(it->key);
    BigInt c = it->coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool has_var = false;
    for (auto x : e) has_var |= x != 0;
    bool wrote = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

BigRational poly_eval(const IntPolynomial& p, std::span<const BigRational> args) { return p.eval(args); }

namespace {

using TermList = std::vector<std::pair<IntPolynomial::Exponents, BigInt>>;

IntPolynomial compose_rec(const TermList& terms, std::size_t var, std::span<const IntPolynomial> inner) {
  const auto& vars = inner.front().variables();
  if (terms.empty()) return IntPolynomial::zero(vars);
  if (var == inner.size()) {
    BigInt c = 0;
    for (const auto& [e, k] : terms) c += k;
    return IntPolynomial::constant(vars, c);
  }
  std::map<std::uint32_t, TermList> by_degree;
  for (const auto& t : terms) by_degree[t.first[var]].push_back(t);
  const std::uint32_t top = by_degree.rbegin()->first;
  IntPolynomial acc = IntPolynomial::zero(vars);
  for (std::uint32_t d = top + 1; d-- > 0;) {
    if (!acc.is_zero()) acc = acc * inner[var];
    auto it = by_degree.find(d);
    if (it != by_degree.end()) acc += compose_rec(it->second, var + 1, inner);
  }
  return acc;
}

}  // namespace

IntPolynomial poly_compose(const IntPolynomial& outer, std::span<const IntPolynomial> inner) {
  if (inner.size() != outer.arity()) {
    throw Error(ErrorCode::ArityMismatch, "compose: expected " + std::to_string(outer.arity()) +
                                              " inner polynomials, got " + std::to_string(inner.size()));
  }
  if (inner.empty()) {
    // Constant outer over no variables; nothing to substitute into.
    throw Error(ErrorCode::ArityMismatch, "compose: outer polynomial has no variables");
  }
  for (const auto& q : inner) {
    if (q.variables() != inner.front().variables()) {
      throw Error(ErrorCode::ArityMismatch, "compose: inner polynomials must share one variable list");
    }
  }
  TermList terms;
  terms.reserve(outer.term_count());
  for (const auto& t : outer.raw_terms()) terms.emplace_back(outer.exponents(t.key), t.coeff);
  return compose_rec(terms, 0, inner);
}

}  // namespace legh
