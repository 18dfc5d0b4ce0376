#pragma once
// Exact and floating scalars: Rational, QuadExt (a + b*sqrt(d)), Complex<F>,
// plus the Lobachevsky series.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace tps {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultTol = 1e-9;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        // this Boost version rejects a negative denominator
        v_ = d < 0 ? boost::multiprecision::cpp_rational(-n, -d) : boost::multiprecision::cpp_rational(n, d);
    }

    // Accepts "p", "p/q" and decimals like "-1.25".
    static Rational parse(std::string_view s) {
        auto trim = [](std::string_view t) {
            while (!t.empty() && std::isspace((unsigned char)t.front())) t.remove_prefix(1);
            while (!t.empty() && std::isspace((unsigned char)t.back())) t.remove_suffix(1);
            return t;
        };
        s = trim(s);
        if (s.empty()) throw std::invalid_argument("rational: empty string");
        auto int_of = [](std::string_view t) {
            t = t.empty() ? t : t;
            std::size_t i = (t.size() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
            if (i == t.size()) throw std::invalid_argument("rational: bad integer '" + std::string(t) + "'");
            for (std::size_t k = i; k < t.size(); ++k)
                if (!std::isdigit((unsigned char)t[k]))
                    throw std::invalid_argument("rational: bad integer '" + std::string(t) + "'");
            std::string body(t.substr(t[0] == '+' ? 1 : 0));
            return BigInt(body);
        };
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            BigInt d = int_of(trim(s.substr(slash + 1)));
            if (d == 0) throw std::invalid_argument("rational: zero denominator");
            return Rational(int_of(trim(s.substr(0, slash))), d);
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string whole(s.substr(0, dot)), frac(s.substr(dot + 1));
            bool neg = !whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-" || whole == "+") whole += "0";
            if (frac.empty()) frac = "0";
            BigInt scale = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
            BigInt w = int_of(whole), f = int_of(frac);
            if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("rational: bad decimal");
            BigInt num = (w < 0 ? -w : w) * scale + f;
            return Rational(neg ? -num : num, scale);
        }
        return Rational(int_of(s));
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    double to_double() const { return v_.convert_to<double>(); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.v_ < b.v_ ? std::strong_ordering::less
             : a.v_ > b.v_ ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    BigInt floor() const {
        BigInt n = num(), d = den();
        BigInt q = n / d;
        if (n < 0 && q * d != n) q -= 1;
        return q;
    }

    std::string str() const {
        std::ostringstream os;
        os << num();
        if (den() != 1) os << '/' << den();
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational v_;
};

// Exact value of a finite double.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational: non-finite double");
    int e = 0;
    double m = std::frexp(x, &e);
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    BigInt num(mant), den(1);
    if (e > 0) num <<= e;
    else den <<= -e;
    return Rational(num, den);
}

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
    auto p = exact_isqrt(x.num());
    auto q = exact_isqrt(x.den());
    if (!p || !q) return std::nullopt;
    return Rational(*p, *q);
}

// Writes |n| = s^2 * f with f square-free and returns {f, s}. Trial division only.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) return {0, 0};
    BigInt f = 1, s = 1;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2) f *= p;
    }
    f *= n;
    return {f, s};
}

inline bool is_squarefree(const BigInt& d) { return d > 0 && squarefree_split(d).second == 1; }

// a + b*sqrt(d). d == 0 marks a plain rational that adopts its partner's d.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long long a) : a_(a) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b, long long d) : QuadExt(std::move(a), std::move(b), BigInt(d)) {}
    QuadExt(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ <= 0 || !is_squarefree(d_)) throw std::domain_error("quadext: d must be positive square-free");
        if (d_ == 1) { a_ += b_; b_ = 0; }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { QuadExt r = *this; r.b_ = -r.b_; return r; }
    // a^2 - b^2 d
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(BigInt(d_).convert_to<double>()); }

    QuadExt operator-() const { QuadExt r = *this; r.a_ = -r.a_; r.b_ = -r.b_; return r; }
    QuadExt& operator+=(const QuadExt& o) { adopt(o); a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { adopt(o); a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        adopt(o);
        Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d_);
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw std::domain_error("quadext: division by zero");
        adopt(o);
        Rational n = o.norm();
        QuadExt c = o.conj();
        c.d_ = d_;
        *this *= c;
        a_ /= n;
        b_ /= n;
        return *this;
    }
    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
        return s + b_.str() + "*sqrt(" + d_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

private:
    void adopt(const QuadExt& o) {
        if (o.d_ == 0 || o.d_ == d_) return;
        if (d_ == 0) { d_ = o.d_; return; }
        if (o.is_rational() || is_rational()) {
            if (is_rational()) d_ = o.d_;
            return;
        }
        throw std::domain_error("quadext: mismatched d (" + d_.str() + " vs " + o.d_.str() + ")");
    }

    Rational a_, b_;
    BigInt d_ = 0;
};

// Field hooks used by generic code. Exact types ignore the tolerance.
inline int sgn(const Rational& x, double = kDefaultTol) { return x.sign(); }
inline int sgn(const QuadExt& x, double = kDefaultTol) { return x.sign(); }
inline int sgn(double x, double tol = kDefaultTol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(const QuadExt& x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline std::optional<Rational> try_sqrt(const Rational& x) { return exact_sqrt(x); }
inline std::optional<double> try_sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
}
inline std::optional<QuadExt> try_sqrt(const QuadExt& x) {
    if (!x.is_rational()) return std::nullopt;
    auto r = exact_sqrt(x.a());
    if (!r) return std::nullopt;
    return QuadExt(*r);
}

enum class Backend { rational, quadratic, floating };

template <class F> struct backend_of;
template <> struct backend_of<Rational> { static constexpr Backend value = Backend::rational; };
template <> struct backend_of<QuadExt> { static constexpr Backend value = Backend::quadratic; };
template <> struct backend_of<double> { static constexpr Backend value = Backend::floating; };

template <class F>
inline constexpr bool is_exact_v = backend_of<F>::value != Backend::floating;

template <class F>
struct Complex {
    F re{}, im{};

    Complex() = default;
    Complex(F r) : re(std::move(r)), im(0) {}
    Complex(F r, F i) : re(std::move(r)), im(std::move(i)) {}
    template <class I, class = std::enable_if_t<std::is_integral_v<I>>>
    Complex(I r) : re(F(static_cast<long long>(r))), im(0) {}

    static constexpr Backend backend = backend_of<F>::value;
    static Complex i() { return Complex(F(0), F(1)); }

    Complex conj() const { return {re, -im}; }
    F norm2() const { return re * re + im * im; }
    bool is_zero(double tol = kDefaultTol) const { return sgn(re, tol) == 0 && sgn(im, tol) == 0; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        F r = re * o.re - im * o.im;
        F i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        F n = o.norm2();
        if constexpr (is_exact_v<F>) {
            if (sgn(n) == 0) throw std::domain_error("complex: division by zero");
        } else {
            if (n == 0.0) throw std::domain_error("complex: division by zero");
        }
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    std::string str() const {
        std::ostringstream os;
        if constexpr (std::is_same_v<F, double>) {
            os.precision(17);
            os << re << (im < 0 ? "" : "+") << im << "i";
        } else {
            os << re.str() << (im.sign() < 0 ? "" : "+") << im.str() << "i";
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(); }
};

using CQ = Complex<Rational>;
using CQuad = Complex<QuadExt>;
using CF = Complex<double>;

template <class F>
bool near(const Complex<F>& a, const Complex<F>& b, double tol = kDefaultTol) {
    return sgn(F(a.re - b.re), tol) == 0 && sgn(F(a.im - b.im), tol) == 0;
}

template <class F>
CF to_cf(const Complex<F>& z) { return {to_double(z.re), to_double(z.im)}; }

inline CQuad to_cquad(const CQ& z) { return {QuadExt(z.re), QuadExt(z.im)}; }

// Parses "a+bi", "a-bi", "bi", "a", "i" with rational a, b.
inline CQ parse_complex(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("complex: empty string");
    if (t.back() != 'i') return CQ(Rational::parse(t));
    t.pop_back();
    // split at the last sign that is not leading and not right after '/'
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') { cut = k; break; }
    std::string re = cut == std::string::npos ? "0" : t.substr(0, cut);
    std::string im = cut == std::string::npos ? t : t.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return CQ(Rational::parse(re), Rational::parse(im));
}

// Runtime-tagged complex value. Arithmetic across different backends throws.
class ComplexScalar {
public:
    using Value = std::variant<CQ, CQuad, CF>;
    ComplexScalar(CQ z) : v_(std::move(z)) {}
    ComplexScalar(CQuad z) : v_(std::move(z)) {}
    ComplexScalar(CF z) : v_(std::move(z)) {}

    Backend backend() const { return static_cast<Backend>(v_.index()); }
    const Value& value() const { return v_; }
    CF to_float() const {
        return std::visit([](const auto& z) { return to_cf(z); }, v_);
    }

    friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) { return a.combine(b, [](auto x, auto y) { return x + y; }); }
    friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) { return a.combine(b, [](auto x, auto y) { return x - y; }); }
    friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) { return a.combine(b, [](auto x, auto y) { return x * y; }); }
    friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) { return a.combine(b, [](auto x, auto y) { return x / y; }); }

    // Exact backends compare exactly; the float backend uses tol.
    bool equals(const ComplexScalar& o, double tol = kDefaultTol) const {
        check(o);
        return std::visit([&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(o.v_);
            if constexpr (std::is_same_v<T, CF>) return near(x, y, tol);
            else return x == y;
        }, v_);
    }

private:
    void check(const ComplexScalar& o) const {
        if (v_.index() != o.v_.index()) throw std::domain_error("complex: mixed backends");
    }
    template <class Op>
    ComplexScalar combine(const ComplexScalar& o, Op op) const {
        check(o);
        return std::visit([&](const auto& x) -> ComplexScalar {
            using T = std::decay_t<decltype(x)>;
            return ComplexScalar(T(op(x, std::get<T>(o.v_))));
        }, v_);
    }
    Value v_;
};

// Series 1/2 * sum_{k=1..terms} sin(2k theta)/k^2. Truncation error <= 1/(2*terms).
inline double lobachevsky(double theta, long long terms = 1000000) {
    if (terms < 1) throw std::invalid_argument("lobachevsky: terms must be >= 1");
    double s = 0.0;
    for (long long k = terms; k >= 1; --k) {
        double kd = static_cast<double>(k);
        s += std::sin(2.0 * kd * theta) / (kd * kd);
    }
    return 0.5 * s;
}

inline double lobachevsky_error_bound(long long terms) { return 1.0 / (2.0 * static_cast<double>(terms)); }

}  // namespace tps
