#pragma once

#include "dbr/instance.hpp"

#include <random>

namespace dbr {

struct Fixture {
    std::string name;
    std::string description;
    InstanceData data;
    bool expect_failure = false; // shipped fault-injection fixtures
};

// The instances shipped with the tool; `--fixtures` runs them all. The
// corrupted one exists to demonstrate diagnostics and exits nonzero.
const std::vector<Fixture>& shipped_fixtures();
const Fixture& fixture(const std::string& name);

// Randomized validated V-algebra: a two-step-nilpotent subalgebra p acting
// on an abelian a through supercommuting single-entry maps, so the graded
// Jacobi identity holds by construction for every draw. Comes with a
// Maurer-Cartan adapted derivation.
struct PoolInstance {
    VAlgebra V;
    DerivationSpec mc;
};

std::vector<PoolInstance> random_pool(unsigned long seed, int count);

// Random homogeneous element of the given degree (zero when the degree is
// not populated).
Vec random_homogeneous(const VAlgebra& V, int degree, std::mt19937_64& rng);

// Random homogeneous odd-degree element for the J = D checks; typically
// not Maurer-Cartan, which is the point of those checks.
Vec random_odd_element(const VAlgebra& V, std::mt19937_64& rng);

// Random adapted odd derivation ehat + [P, .] with ehat = ad(q), q in p.
DerivationSpec random_adapted(const VAlgebra& V, std::mt19937_64& rng);

// Random degree-0 derivation series: rational multiples of the grading
// (Euler) derivation plus inner pieces ad(z) with z a degree-0 p-element.
TimeDerivation random_time_derivation(const VAlgebra& V, int order, std::mt19937_64& rng);

// Random coalgebra-morphism series with arbitrary degree-0 components, for
// the combinatorial three-way identity.
MorphismSeries random_morphism_series(const VAlgebra& V, int arity, int N,
                                      std::mt19937_64& rng);

} // namespace dbr
