#include <p5hom/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace p5hom {

namespace {
    bool all_digits(std::string_view s)
    {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    }

    mpz_class parse_int(std::string_view s)
    {
        bool neg = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (!all_digits(s))
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        mpz_class z(std::string(s), 10);
        return neg ? mpz_class(-z) : z;
    }
}

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
        mpz_class den(std::string(den_text), 10);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
            whole.remove_prefix(1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("not a number: '" + std::string(text) + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        mpz_class num = (whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10)) * scale +
                        (frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10));
        Rational r(neg ? mpz_class(-num) : num, scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_int(text));
}

std::string format_fraction(const Rational & r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_compact(const Rational & r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return format_fraction(r);
}

}
