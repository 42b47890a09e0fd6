#include "dbr/series.hpp"

namespace dbr {

Series<Rat> invert(const Series<Rat>& a)
{
    if (a.c[0] == 0)
        throw input_error("series inverse requires an invertible constant term");
    Series<Rat> out(a.order);
    out.c[0] = Rat(1) / a.c[0];
    for (int k = 1; k <= a.order; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += a.c[i] * out.c[k - i];
        out.c[k] = -acc / a.c[0];
    }
    return out;
}

Series<LinMap> invert(const Series<LinMap>& a, int dim)
{
    if (!(a.c[0] == LinMap::identity(dim)))
        throw input_error("series inverse requires the identity as leading coefficient");
    Series<LinMap> out(a.order);
    out.c[0] = LinMap::identity(dim);
    for (int k = 1; k <= a.order; ++k) {
        LinMap acc;
        for (int i = 1; i <= k; ++i)
            acc += compose(a.c[i], out.c[k - i]);
        out.c[k] = Rat(-1) * acc;
    }
    return out;
}

} // namespace dbr
