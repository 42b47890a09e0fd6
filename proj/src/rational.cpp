#include "dbr/rational.hpp"

namespace dbr {

Rat parse_rat(const std::string& text)
{
    if (text.empty())
        throw input_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw input_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw input_error("bad rational literal '" + text + "'");
    }
}

std::string format_rat(const Rat& value)
{
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_factorial(int n)
{
    Int f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return Rat(f);
}

} // namespace dbr
