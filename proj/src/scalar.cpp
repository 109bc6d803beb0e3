#include "hodgecalc/scalar.hpp"

#include "hodgecalc/errors.hpp"

#include <cctype>

namespace hodgecalc {

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += t;
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0)
        return;
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ -= t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ += t;
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ += t;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b)
{
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ -= t;
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0)
        return;
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ += t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ -= t;
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ -= t;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

Scalar pow(const Scalar& base, int exponent)
{
    if (exponent < 0)
        return pow(Scalar(1) / base, -exponent);
    Scalar result(1);
    Scalar b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

namespace {

std::string rational_text(const mpq_class& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text, std::string_view whole)
{
    auto bad = [&] { return ParseError("malformed scalar \"" + std::string(whole) + "\""); };
    if (text.empty())
        throw bad();
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-')
        pos = 1;
    bool seen_slash = false;
    bool digits_before = false;
    bool digits_after = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (seen_slash)
                throw bad();
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digits_after : digits_before) = true;
        } else {
            throw bad();
        }
    }
    if (!digits_before || (seen_slash && !digits_after))
        throw bad();
    std::string s(text[0] == '+' ? text.substr(1) : text);
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw bad();
    q.canonicalize();
    return q;
}

} // namespace

std::string Scalar::to_string() const
{
    std::string out = rational_text(re_);
    if (sgn(im_) == 0)
        return out;
    if (sgn(im_) > 0)
        out += "+";
    out += rational_text(im_);
    out += "*i";
    return out;
}

Scalar Scalar::parse(std::string_view whole)
{
    std::string text;
    for (char c : whole)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text.push_back(c);
    if (text.empty())
        throw ParseError("empty scalar");
    if (text.back() != 'i')
        return Scalar(parse_rational(text, whole));

    // Split "<real><sign><imag>i" at the last sign that is not leading.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view real_part;
    std::string_view imag_part;
    if (split == std::string::npos) {
        imag_part = text;
    } else {
        real_part = std::string_view(text).substr(0, split);
        imag_part = std::string_view(text).substr(split);
    }
    imag_part.remove_suffix(1); // trailing 'i'
    if (!imag_part.empty() && imag_part.back() == '*')
        imag_part.remove_suffix(1);
    mpq_class im;
    if (imag_part.empty() || imag_part == "+")
        im = 1;
    else if (imag_part == "-")
        im = -1;
    else
        im = parse_rational(imag_part, whole);
    mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part, whole);
    return Scalar(re, im);
}

} // namespace hodgecalc
