#include "krylovium/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "krylovium/ntt.hpp"

namespace krylovium {

std::size_t& poly_karatsuba_threshold() {
    static std::size_t threshold = 32;
    return threshold;
}

bool& poly_ntt_enabled() {
    static bool enabled = true;
    return enabled;
}

Poly::Poly(std::vector<std::uint64_t> coeffs, PrimeModulus mod) : c_(std::move(coeffs)), mod_(mod) {
    for (auto& v : c_) v = mod_.reduce(v);
    normalize();
}

Poly Poly::monomial(std::uint64_t c, std::size_t k, PrimeModulus mod) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(v), mod);
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& a, const Poly& b) {
    if (a.mod_ != b.mod_) throw ModulusMismatchError("polynomials under different moduli");
}

Poly Poly::operator+(const Poly& g) const {
    check_same(*this, g);
    Poly r(mod_);
    r.c_.resize(std::max(c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_.add(coeff(i), g.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& g) const {
    check_same(*this, g);
    Poly r(mod_);
    r.c_.resize(std::max(c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_.sub(coeff(i), g.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::scaled(std::uint64_t c) const {
    c = mod_.reduce(c);
    Poly r(mod_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_.mul(c_[i], c);
    r.normalize();
    return r;
}

void Poly::add_scaled(const Poly& g, std::uint64_t c) { add_scaled_shifted(g, c, 0); }

void Poly::add_scaled_shifted(const Poly& g, std::uint64_t c, std::size_t k) {
    check_same(*this, g);
    c = mod_.reduce(c);
    if (c == 0 || g.is_zero()) return;
    if (c_.size() < g.c_.size() + k) c_.resize(g.c_.size() + k, 0);
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i + k] = mod_.add(c_[i + k], mod_.mul(g.c_[i], c));
    normalize();
}

namespace {

using Coeffs = std::vector<std::uint64_t>;

void mul_schoolbook(const Coeffs& a, const Coeffs& b, Coeffs& out, const PrimeModulus& mod) {
    out.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = mod.add(out[i + j], mod.mul(a[i], b[j]));
        }
    }
}

void mul_karatsuba(const Coeffs& a, const Coeffs& b, Coeffs& out, const PrimeModulus& mod) {
    std::size_t n = std::max(a.size(), b.size());
    if (n <= poly_karatsuba_threshold() || std::min(a.size(), b.size()) < 4) {
        mul_schoolbook(a, b, out, mod);
        return;
    }
    std::size_t h = n / 2;
    auto lo = [&](const Coeffs& v) { return Coeffs(v.begin(), v.begin() + std::min(h, v.size())); };
    auto hi = [&](const Coeffs& v) {
        return v.size() > h ? Coeffs(v.begin() + h, v.end()) : Coeffs{};
    };
    Coeffs a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    auto strip = [](Coeffs& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a0);
    strip(b0);

    Coeffs z0, z2, z1;
    if (!a0.empty() && !b0.empty()) mul_karatsuba(a0, b0, z0, mod);
    if (!a1.empty() && !b1.empty()) mul_karatsuba(a1, b1, z2, mod);
    Coeffs as(std::max(a0.size(), a1.size()), 0), bs(std::max(b0.size(), b1.size()), 0);
    for (std::size_t i = 0; i < as.size(); ++i)
        as[i] = mod.add(i < a0.size() ? a0[i] : 0, i < a1.size() ? a1[i] : 0);
    for (std::size_t i = 0; i < bs.size(); ++i)
        bs[i] = mod.add(i < b0.size() ? b0[i] : 0, i < b1.size() ? b1[i] : 0);
    strip(as);
    strip(bs);
    if (!as.empty() && !bs.empty()) mul_karatsuba(as, bs, z1, mod);
    // z1 -= z0 + z2
    if (z1.size() < std::max(z0.size(), z2.size())) z1.resize(std::max(z0.size(), z2.size()), 0);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = mod.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = mod.sub(z1[i], z2[i]);

    out.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = mod.add(out[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + h < out.size()) out[i + h] = mod.add(out[i + h], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i)
        if (i + 2 * h < out.size()) out[i + 2 * h] = mod.add(out[i + 2 * h], z2[i]);
}

bool mul_ntt(const Coeffs& a, const Coeffs& b, Coeffs& out, const PrimeModulus& mod) {
    std::size_t result_len = a.size() + b.size() - 1;
    std::size_t len = detail::next_pow2(result_len);
    if (!detail::ntt_available(mod.value(), len)) return false;
    detail::MontgomeryDomain md(mod.value());
    detail::NttPlan plan(md, len);
    std::vector<std::uint64_t> fa(len, 0), fb(len, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = md.to(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = md.to(b[i]);
    plan.forward(fa.data());
    plan.forward(fb.data());
    for (std::size_t i = 0; i < len; ++i) fa[i] = md.mul(fa[i], fb[i]);
    plan.inverse(fa.data());
    out.resize(result_len);
    for (std::size_t i = 0; i < result_len; ++i) out[i] = md.from(fa[i]);
    return true;
}

}  // namespace

Poly Poly::operator*(const Poly& g) const {
    check_same(*this, g);
    Poly r(mod_);
    if (is_zero() || g.is_zero()) return r;
    std::size_t n = std::max(c_.size(), g.c_.size());
    if (n > 256 && poly_ntt_enabled() && mul_ntt(c_, g.c_, r.c_, mod_)) {
        r.normalize();
        return r;
    }
    if (n > poly_karatsuba_threshold()) {
        mul_karatsuba(c_, g.c_, r.c_, mod_);
    } else {
        mul_schoolbook(c_, g.c_, r.c_, mod_);
    }
    r.normalize();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    check_same(*this, g);
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly q(mod_), r = *this;
    if (degree() < g.degree()) return {q, r};
    std::uint64_t lead_inv = mod_.inv(g.leading_coeff());
    q.c_.assign(c_.size() - g.c_.size() + 1, 0);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        std::uint64_t coef = mod_.mul(r.leading_coeff(), lead_inv);
        q.c_[shift] = coef;
        r.add_scaled_shifted(g, mod_.neg(coef), shift);
    }
    q.normalize();
    return {q, r};
}

Poly Poly::gcd(Poly f, Poly g) {
    check_same(f, g);
    while (!g.is_zero()) {
        Poly r = f.divrem(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.is_zero() ? f : f.make_monic();
}

Poly Poly::truncated(std::int64_t d) const {
    if (d < 0) throw std::invalid_argument("truncation order must be >= 0");
    Poly r(mod_);
    std::size_t keep = std::min<std::size_t>(c_.size(), static_cast<std::size_t>(d));
    r.c_.assign(c_.begin(), c_.begin() + keep);
    r.normalize();
    return r;
}

Poly Poly::reversed(std::int64_t d) const {
    if (d < 0) throw std::invalid_argument("reversal order must be >= 0");
    if (degree() > d) throw std::invalid_argument("reversal order below polynomial degree");
    Poly r(mod_);
    r.c_.assign(static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<std::size_t>(d) - i] = c_[i];
    r.normalize();
    return r;
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) {
        Poly r = *this;
        return r;
    }
    Poly r(mod_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

Poly Poly::shifted_down(std::size_t k) const {
    Poly r(mod_);
    if (c_.size() > k) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

std::uint64_t Poly::eval(std::uint64_t x0) const {
    x0 = mod_.reduce(x0);
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = mod_.add(mod_.mul(acc, x0), c_[i]);
    return acc;
}

Poly Poly::make_monic() const {
    if (is_zero()) throw DivisionByZeroError("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(mod_.inv(leading_coeff()));
}

Poly Poly::powmod_x(const BigNat& k, const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("powmod requires a monic modulus of degree >= 1");
    const PrimeModulus& mod = f.modulus();
    Poly acc = Poly::one(mod);
    Poly base = Poly::monomial(1, 1, mod).divrem(f).second;  // x rem f
    BigNat e = k;
    while (!e.is_zero()) {
        if (e.is_odd()) acc = (acc * base).divrem(f).second;
        base = (base * base).divrem(f).second;
        e.shr1();
    }
    return acc;
}

}  // namespace krylovium
