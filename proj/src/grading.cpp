#include "dbr/grading.hpp"

#include <sstream>

namespace dbr {

GradedBasis::GradedBasis(std::vector<std::pair<std::string, int>> elements)
{
    for (auto& [name, deg] : elements) {
        if (index_.count(name))
            throw input_error("duplicate basis name '" + name + "'");
        index_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
        degrees_.push_back(deg);
    }
}

int GradedBasis::degree(int i) const
{
    if (i < 0 || i >= size())
        throw input_error("basis index out of range");
    return degrees_[i];
}

const std::string& GradedBasis::name(int i) const
{
    if (i < 0 || i >= size())
        throw input_error("basis index out of range");
    return names_[i];
}

std::optional<int> GradedBasis::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int GradedBasis::require(const std::string& name) const
{
    auto i = find(name);
    if (!i)
        throw input_error("unknown basis name '" + name + "'");
    return *i;
}

void Vec::add_term(int i, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Rat Vec::coeff(int i) const
{
    auto it = terms.find(i);
    return it == terms.end() ? Rat(0) : it->second;
}

Vec& Vec::operator+=(const Vec& o)
{
    for (auto& [i, c] : o.terms)
        add_term(i, c);
    return *this;
}

Vec& Vec::operator-=(const Vec& o)
{
    for (auto& [i, c] : o.terms)
        add_term(i, -c);
    return *this;
}

Vec& Vec::operator*=(const Rat& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [i, v] : terms)
        v *= c;
    return *this;
}

Vec basis_vec(int i)
{
    Vec v;
    v.terms[i] = 1;
    return v;
}

std::optional<int> homogeneous_degree(const GradedBasis& basis, const Vec& v)
{
    std::optional<int> deg;
    for (auto& [i, c] : v.terms) {
        int d = basis.degree(i);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::string format_vec(const GradedBasis& basis, const Vec& v)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, c] : v.terms) {
        if (!first)
            os << " + ";
        first = false;
        os << format_rat(c) << "*" << basis.name(i);
    }
    return os.str();
}

Vec LinMap::apply_basis(int i) const
{
    auto it = cols.find(i);
    return it == cols.end() ? Vec{} : it->second;
}

Vec LinMap::apply(const Vec& v) const
{
    Vec out;
    for (auto& [i, c] : v.terms) {
        auto it = cols.find(i);
        if (it == cols.end())
            continue;
        for (auto& [j, d] : it->second.terms)
            out.add_term(j, c * d);
    }
    return out;
}

void LinMap::set_col(int i, Vec v)
{
    if (v.is_zero())
        cols.erase(i);
    else
        cols[i] = std::move(v);
}

LinMap& LinMap::operator+=(const LinMap& o)
{
    for (auto& [i, col] : o.cols) {
        Vec sum = apply_basis(i) + col;
        set_col(i, std::move(sum));
    }
    return *this;
}

LinMap& LinMap::operator-=(const LinMap& o)
{
    for (auto& [i, col] : o.cols) {
        Vec diff = apply_basis(i) - col;
        set_col(i, std::move(diff));
    }
    return *this;
}

LinMap& LinMap::operator*=(const Rat& c)
{
    if (c == 0) {
        cols.clear();
        return *this;
    }
    for (auto& [i, col] : cols)
        col *= c;
    return *this;
}

LinMap LinMap::identity(int n)
{
    LinMap m;
    m.degree = 0;
    for (int i = 0; i < n; ++i)
        m.cols[i] = basis_vec(i);
    return m;
}

LinMap compose(const LinMap& f, const LinMap& g)
{
    LinMap out;
    out.degree = f.degree + g.degree;
    for (auto& [i, col] : g.cols)
        out.set_col(i, f.apply(col));
    return out;
}

bool columns_homogeneous(const GradedBasis& basis, const LinMap& m)
{
    for (auto& [i, col] : m.cols) {
        auto d = homogeneous_degree(basis, col);
        if (d && *d != basis.degree(i) + m.degree)
            return false;
    }
    return true;
}

} // namespace dbr
