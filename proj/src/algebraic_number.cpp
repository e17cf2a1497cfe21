#include "rtlink/algebraic_number.hpp"

#include <sstream>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

bool same_coeffs(const Coeffs& a, const Coeffs& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = i < a.size() ? a[i] : Rational(0);
        Rational y = i < b.size() ? b[i] : Rational(0);
        if (x != y)
            return false;
    }
    return true;
}

template <class R>
R precision_eps();
template <>
Real precision_eps<Real>() {
    return Real("1e-112");
}
template <>
RealHigh precision_eps<RealHigh>() {
    return RealHigh("1e-590");
}

template <class R>
int try_sign(const FieldContext& ctx, const Coeffs& a, int j) {
    auto [v, mag] = ctx.evaluate<R>(a, j);
    R bound = mag * precision_eps<R>() * (ctx.degree() + 10);
    if (v > bound)
        return 1;
    if (v < -bound)
        return -1;
    return 0;
}

}   // namespace

int certified_sign(const FieldContext& ctx, const Coeffs& a, int j) {
    if (FieldContext::is_zero(a))
        return 0;
    if (int s = try_sign<Real>(ctx, a, j))
        return s;
    if (int s = try_sign<RealHigh>(ctx, a, j))
        return s;
    throw VerificationError("nonzero element too close to zero to certify its sign");
}

AlgebraicNumber::AlgebraicNumber(FieldPtr ctx, Coeffs base) : ctx_(std::move(ctx)), base_(std::move(base)) {
    base_.resize(ctx_->degree());
}

AlgebraicNumber::AlgebraicNumber(FieldPtr ctx, Coeffs base, Coeffs ext, std::shared_ptr<const Coeffs> radicand)
    : ctx_(std::move(ctx)), base_(std::move(base)), ext_(std::move(ext)), radicand_(std::move(radicand)) {
    base_.resize(ctx_->degree());
    if (radicand_)
        ext_.resize(ctx_->degree());
    else
        ext_.clear();
}

AlgebraicNumber AlgebraicNumber::rational(FieldPtr ctx, const Rational& q) {
    Coeffs c = ctx->constant(q);
    return AlgebraicNumber(std::move(ctx), std::move(c));
}

bool AlgebraicNumber::has_extension_part() const { return radicand_ && !FieldContext::is_zero(ext_); }

void AlgebraicNumber::check_compatible(const AlgebraicNumber& other) const {
    if (ctx_->L() != other.ctx_->L())
        throw DomainError("operands live in different fields (L=" + std::to_string(ctx_->L()) +
                          " vs L=" + std::to_string(other.ctx_->L()) + ")");
    if (radicand_ && other.radicand_ && radicand_ != other.radicand_ && !same_coeffs(*radicand_, *other.radicand_))
        throw DomainError("operands use different square roots");
}

AlgebraicNumber AlgebraicNumber::promoted(const std::shared_ptr<const Coeffs>& rad) const {
    if (radicand_ || !rad)
        return *this;
    return AlgebraicNumber(ctx_, base_, ctx_->zero(), rad);
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber r = *this;
    for (auto& c : r.base_)
        c = -c;
    for (auto& c : r.ext_)
        c = -c;
    return r;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    a.check_compatible(b);
    const auto& rad = a.radicand_ ? a.radicand_ : b.radicand_;
    AlgebraicNumber x = a.promoted(rad), y = b.promoted(rad);
    const FieldContext& k = *a.ctx_;
    if (!rad)
        return AlgebraicNumber(a.ctx_, k.add(x.base_, y.base_));
    return AlgebraicNumber(a.ctx_, k.add(x.base_, y.base_), k.add(x.ext_, y.ext_), rad);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    a.check_compatible(b);
    const FieldContext& k = *a.ctx_;
    if (!a.radicand_ && !b.radicand_)
        return AlgebraicNumber(a.ctx_, k.mul(a.base_, b.base_));
    const auto& rad = a.radicand_ ? a.radicand_ : b.radicand_;
    AlgebraicNumber x = a.promoted(rad), y = b.promoted(rad);
    // (p + q s)(u + v s) = pu + qv D + (pv + qu) s
    Coeffs base = k.mul(x.base_, y.base_);
    if (!FieldContext::is_zero(x.ext_) && !FieldContext::is_zero(y.ext_))
        base = k.add(base, k.mul(k.mul(x.ext_, y.ext_), *rad));
    Coeffs ext = k.add(k.mul(x.base_, y.ext_), k.mul(x.ext_, y.base_));
    return AlgebraicNumber(a.ctx_, std::move(base), std::move(ext), rad);
}

AlgebraicNumber AlgebraicNumber::operator*(const Rational& q) const {
    AlgebraicNumber r = *this;
    for (auto& c : r.base_)
        c *= q;
    for (auto& c : r.ext_)
        c *= q;
    return r;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero())
        throw ArithmeticError("inverse of zero");
    const FieldContext& k = *ctx_;
    if (!has_extension_part()) {
        AlgebraicNumber r(ctx_, k.inverse(base_));
        return radicand_ ? r.promoted(radicand_) : r;
    }
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 D)
    Coeffs norm = k.sub(k.mul(base_, base_), k.mul(k.mul(ext_, ext_), *radicand_));
    if (FieldContext::is_zero(norm))
        throw VerificationError("zero norm for a nonzero element: radicand is a square in the base field");
    Coeffs inv = k.inverse(norm);
    Coeffs neg_ext = k.scale(ext_, -1);
    return AlgebraicNumber(ctx_, k.mul(base_, inv), k.mul(neg_ext, inv), radicand_);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.ctx_->L() != b.ctx_->L())
        return false;
    if (!same_coeffs(a.base_, b.base_) || !same_coeffs(a.ext_, b.ext_))
        return false;
    if (a.has_extension_part())
        return a.radicand_ == b.radicand_ || same_coeffs(*a.radicand_, *b.radicand_);
    return true;
}

bool AlgebraicNumber::is_zero() const { return FieldContext::is_zero(base_) && FieldContext::is_zero(ext_); }

int AlgebraicNumber::sign() const {
    const FieldContext& k = *ctx_;
    int sa = certified_sign(k, base_);
    if (!has_extension_part())
        return sa;
    int sb = certified_sign(k, ext_);
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: compare a^2 with b^2 D.
    Coeffs diff = k.sub(k.mul(base_, base_), k.mul(k.mul(ext_, ext_), *radicand_));
    return sa * certified_sign(k, diff);
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
    if (has_extension_part() || !FieldContext::is_constant(base_))
        return std::nullopt;
    return base_[0];
}

Real AlgebraicNumber::value() const {
    Real v = ctx_->evaluate<Real>(base_).first;
    if (has_extension_part())
        v += ctx_->evaluate<Real>(ext_).first * sqrt(ctx_->evaluate<Real>(*radicand_).first);
    return v;
}

double AlgebraicNumber::approx() const { return static_cast<double>(value()); }

RatPoly AlgebraicNumber::minimal_polynomial() const {
    const bool wide = has_extension_part();
    const int d = ctx_->degree();
    const int n = wide ? 2 * d : d;
    auto coords = [&](const AlgebraicNumber& x) {
        std::vector<Rational> v(x.base_);
        if (wide)
            v.insert(v.end(), x.ext_.begin(), x.ext_.end());
        v.resize(n);
        return v;
    };
    struct Row {
        std::vector<Rational> v;
        int pivot;
        std::vector<Rational> comb;
    };
    std::vector<Row> rows;
    AlgebraicNumber power = AlgebraicNumber::rational(ctx_, 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> w = coords(power);
        std::vector<Rational> comb(k + 1);
        comb[k] = 1;
        for (const Row& r : rows) {
            if (w[r.pivot] == 0)
                continue;
            Rational f = w[r.pivot] / r.v[r.pivot];
            for (int i = 0; i < n; ++i)
                if (r.v[i] != 0)
                    w[i] -= f * r.v[i];
            for (std::size_t i = 0; i < r.comb.size(); ++i)
                comb[i] -= f * r.comb[i];
        }
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (w[i] != 0)
                pivot = i;
        if (pivot < 0)
            return comb;   // monic: the x^k coefficient is untouched
        rows.push_back({std::move(w), pivot, std::move(comb)});
        power = power * *this;
    }
    throw VerificationError("Krylov sequence did not terminate within the field dimension");
}

bool AlgebraicNumber::is_algebraic_integer() const { return is_integral(minimal_polynomial()); }

std::string AlgebraicNumber::to_string() const {
    std::ostringstream out;
    bool base_zero = FieldContext::is_zero(base_);
    if (!base_zero || !has_extension_part())
        out << poly_to_string(RatPoly(base_.begin(), base_.end()), "g");
    if (!base_zero && has_extension_part())
        out << " + ";
    if (has_extension_part())
        out << "(" << poly_to_string(RatPoly(ext_.begin(), ext_.end()), "g") << ")*sqrt("
            << poly_to_string(RatPoly(radicand_->begin(), radicand_->end()), "g") << ")";
    return out.str();
}

AlgebraicNumber embed_cos(const FieldPtr& ctx, int k) {
    if (k < 1 || ctx->L() % k != 0)
        throw DomainError(std::to_string(k) + " does not divide L=" + std::to_string(ctx->L()));
    return AlgebraicNumber(ctx, ctx->cos_multiple(ctx->L() / k));
}

std::optional<Rational> is_rational(const AlgebraicNumber& x) { return x.as_rational(); }
RatPoly minimal_polynomial(const AlgebraicNumber& x) { return x.minimal_polynomial(); }
bool is_algebraic_integer(const AlgebraicNumber& x) { return x.is_algebraic_integer(); }

}   // namespace rtlink
