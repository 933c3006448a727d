#ifndef LIECLASS_FORMAL_HPP
#define LIECLASS_FORMAL_HPP

#include "lieclass/diffop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

struct NonDiscreteCharVariety : std::runtime_error {
    NonDiscreteCharVariety() : std::runtime_error("characteristic variety is not discrete") {}
};

// Generator list plus frame. Generators are kept nonzero, leading-coefficient
// normalized and inter-reduced (no leading monomial divides another's).
struct PDESystem {
    std::vector<DiffOp> generators;
    Frame frame;  // X = Dx + a, Y = Dy + b
};

// Record of one S-pair reduction that produced a new basis element during
// completion, in chronological order.
struct CompletionWitness {
    int order;      // order of the new element at the time it was produced
    DiffOp element;
};

struct CompletedIdeal {
    std::vector<DiffOp> basis;  // inter-reduced left Groebner basis, monic,
                                // sorted by (order, Dy-degree of lm)
    std::vector<CompletionWitness> witnesses;
    bool trivial = false;       // 1 lies in the ideal (only solution u = 0)
};

// Left Buchberger completion under the graded Dy-major order.
CompletedIdeal complete(const PDESystem& sys);
CompletedIdeal complete(const std::vector<DiffOp>& gens);

// Full left normal form modulo the basis.
DiffOp reduce(const DiffOp& f, const std::vector<DiffOp>& basis);

// Basis (as binary forms) of the degree-k piece J_k of the symbol ideal:
// span of m * symb(G) over basis elements G and monomials m.
std::vector<BinaryForm> symbol_space(const CompletedIdeal& ci, unsigned k);
int symbol_space_dim(const CompletedIdeal& ci, unsigned k);

// One point of the characteristic divisor: a square-free binary-form factor
// over Q(x,y) with its multiplicity.
struct DivisorPoint {
    BinaryForm factor;
    unsigned multiplicity;
};

struct CharData {
    std::vector<DivisorPoint> divisor;
    unsigned omega = 0;
};

CharData char_divisor(const CompletedIdeal& ci);

struct SymbolProfile {
    std::vector<int> gdims;  // dim g_k for k = 0..k_stab+1
    unsigned k_stab = 0;
    std::vector<DivisorPoint> char_divisor;
    unsigned omega = 0;
    unsigned kappa = 0;
};

SymbolProfile symbol_profile(const CompletedIdeal& ci);

struct Compatibility {
    bool compatible = true;
    int order = 0;         // lowest failing order when incompatible
    DiffOp witness;        // reduced S-polynomial witness
};

Compatibility is_compatible(const PDESystem& sys, const CompletedIdeal& ci);

struct SpencerData {
    std::map<unsigned, unsigned> m;  // order -> number of new equations
    unsigned h1 = 0;
    unsigned h2 = 0;
    std::vector<unsigned> type_sig;  // sorted multiset of orders
};

SpencerData spencer_numbers(const PDESystem& sys, const CompletedIdeal& ci);

std::string type_name(const std::vector<unsigned>& orders);  // e.g. "3E3", "E2+E3"

// Span basis with distinct leading monomials (monic; tails not reduced) of
// all left multiples m*B with ord(m*B) <= n. Shared with the Laplace pipeline.
std::vector<DiffOp> ideal_span_echelon(const std::vector<DiffOp>& basis, unsigned n);

}  // namespace lieclass

#endif
