#ifndef LIECLASS_LAPLACE_HPP
#define LIECLASS_LAPLACE_HPP

#include "lieclass/formal.hpp"
#include "lieclass/solution.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieclass {

struct NotClassOne : std::runtime_error {
    explicit NotClassOne(unsigned omega)
        : std::runtime_error("system has class " + std::to_string(omega) + ", expected 1") {}
};

struct CharNotStraightened : std::runtime_error {
    CharNotStraightened()
        : std::runtime_error("characteristic divisor is not the straightened direction Dx") {}
};

struct GaugeEquationDifferential : std::runtime_error {
    GaugeEquationDifferential()
        : std::runtime_error("gauge condition is differential, not algebraic") {}
};

struct UnsupportedType : std::runtime_error {
    explicit UnsupportedType(const std::string& t)
        : std::runtime_error("no named invariant table for type " + t) {}
};

struct IncompatibleSystem : std::runtime_error {
    Compatibility detail;
    explicit IncompatibleSystem(Compatibility c)
        : std::runtime_error("system is incompatible at order " + std::to_string(c.order)),
          detail(std::move(c)) {}
};

// Reduction ended at a finite-type system of order >= 2, which is not
// solvable in quadratures here.
struct ReducedToODE : std::runtime_error {
    std::vector<DiffOp> residual_system;
    explicit ReducedToODE(std::vector<DiffOp> r)
        : std::runtime_error("reduced to a finite-type system of order >= 2"),
          residual_system(std::move(r)) {}
};

// Everything the pipeline needs to know about one system.
struct Prepared {
    PDESystem sys;       // minimal Spencer generators, sorted by Dy-degree of lm
    CompletedIdeal ci;
    SymbolProfile profile;
    SpencerData spencer;
};

// Complete, verify compatibility, and re-choose generators so their leading
// monomials have strictly increasing Dy-degree. Throws IncompatibleSystem,
// NotClassOne or CharNotStraightened per the stated preconditions.
Prepared normalize_generators(const PDESystem& sys);
// As above but without the class-1 requirement (used by analysis paths).
Prepared prepare_any(const PDESystem& sys);

struct GaugeChoice {
    RatFunc a;                  // X -> X + a
    RatFunc sigma = RatFunc(1);  // optional rescaling u -> sigma u
};

// The unique shift X -> X + a killing the top pure-Y coefficient of the
// highest-Dy generator. Returns the gauge and the system with its frame
// updated (the generators are unchanged as operators).
std::pair<GaugeChoice, Prepared> basic_gauge(const Prepared& p);

enum class InverseKind { Differential, Frobenius, Integral };

std::string inverse_kind_name(InverseKind k);

// First-order finite-type system determining u from v:
//   u_x + a u = v,   u_y + rho u = B[v].
struct FrobeniusInverse {
    RatFunc a, rho;
    DiffOp B;
};

struct LaplaceStep {
    GaugeChoice gauge;
    PDESystem transformed;
    CompletedIdeal transformed_ci;
    InverseKind inverse_kind = InverseKind::Integral;
    std::optional<DiffOp> inverse_op;             // Differential
    std::optional<FrobeniusInverse> inverse_system;  // Frobenius
    int inverse_order = -1;  // order of L; 0 for Frobenius, -1 for integral
    // classification of the source system
    std::string type;          // e.g. "3E3"
    std::string branch;        // e.g. "U333a"; empty if outside the table
    unsigned kappa_before = 0, kappa_after = 0;
};

// One generalized Laplace transformation v = Xu of a gauged system.
LaplaceStep laplace_step(const Prepared& gauged, const GaugeChoice& gauge);

// Differential inverses: operators L with L∘X = 1 mod the ideal, found as
// ideal elements whose framed pure-Y part is a nonzero multiple of 1.
// Returns up to max_count independently eliminated inverses.
std::vector<DiffOp> inverse_operators(const CompletedIdeal& ci, const RatFunc& a,
                                      unsigned order_bound, unsigned max_count);
std::optional<DiffOp> inverse_operator(const Prepared& gauged, const GaugeChoice& gauge);

// Whether L1 - L2 reduces to zero modulo the transformed ideal.
bool inverse_unique_check(const DiffOp& l1, const DiffOp& l2, const CompletedIdeal& transformed);

struct NamedInvariant {
    std::string name;
    RatFunc value;
    std::string condition;  // applicability condition, empty if unconditional
};

struct RelativeInvariants {
    std::string type;     // "2E2", "E2+E3", "3E3", "2E3"
    std::string family;   // "U22", "U23-1", "U23-2", "U333", "U33-1", "U33-2"
    std::string branch;   // family plus sub-case letter, e.g. "U23-2a"
    std::vector<NamedInvariant> values;
    bool ties_ok = true;  // the compatibility ties hold exactly
};

RelativeInvariants relative_invariants(const Prepared& gauged, const GaugeChoice& gauge);

struct TraceEntry {
    std::string type;
    unsigned kappa = 0;
    std::string branch;
    InverseKind inverse_kind = InverseKind::Integral;
    int inverse_order = -1;
};

struct IntegrateResult {
    SolutionExpr solution;
    std::vector<TraceEntry> trace;
    std::string terminal;  // "E1", "frobenius", or "ode" (never returned for ode)
    int q = 0;             // max derivative of the arbitrary function
    int n_constants = 0;
    bool verified = false;  // verify_solution result (quadrature-free runs)
};

IntegrateResult integrate(const PDESystem& sys);

bool verify_solution(const PDESystem& sys, const SolutionExpr& sol);

std::vector<TraceEntry> complexity_trace(const PDESystem& sys);

}  // namespace lieclass

#endif
