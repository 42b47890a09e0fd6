#pragma once

#include "dbr/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dbr {

// Finite ordered basis of a graded vector space. The list position is the
// canonical index; names are unique and the order never changes after
// construction.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<std::pair<std::string, int>> elements);

    int size() const { return static_cast<int>(degrees_.size()); }
    int degree(int i) const;
    const std::string& name(int i) const;
    std::optional<int> find(const std::string& name) const;
    int require(const std::string& name) const;

    const std::vector<int>& degrees() const { return degrees_; }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::string, int> index_;
};

// Sparse vector over a graded basis. Zero coefficients are never stored;
// the ordered map makes every iteration (and so every report) deterministic.
struct Vec {
    std::map<int, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(int i, const Rat& c);
    Rat coeff(int i) const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Rat& c);

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rat& c, Vec v) { return v *= c; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.terms == b.terms; }
    friend bool operator<(const Vec& a, const Vec& b) { return a.terms < b.terms; }
};

Vec basis_vec(int i);

// Degree of a homogeneous vector; nullopt for 0 (any degree) or a mix.
std::optional<int> homogeneous_degree(const GradedBasis& basis, const Vec& v);

std::string format_vec(const GradedBasis& basis, const Vec& v);

// Sparse degree-shifting linear map, stored column by column. Columns that
// are missing are zero. The degree tag is meaningful only for nonzero maps.
struct LinMap {
    int degree = 0;
    std::map<int, Vec> cols;

    Vec apply_basis(int i) const;
    Vec apply(const Vec& v) const;
    void set_col(int i, Vec v);

    LinMap& operator+=(const LinMap& o);
    LinMap& operator-=(const LinMap& o);
    LinMap& operator*=(const Rat& c);

    friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
    friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
    friend LinMap operator*(const Rat& c, LinMap m) { return m *= c; }
    friend bool operator==(const LinMap& a, const LinMap& b) { return a.cols == b.cols; }

    static LinMap identity(int n);
};

// (f . g)(x) = f(g(x)).
LinMap compose(const LinMap& f, const LinMap& g);

// Checks that every column i is homogeneous of degree deg(i) + map degree.
bool columns_homogeneous(const GradedBasis& basis, const LinMap& m);

} // namespace dbr
