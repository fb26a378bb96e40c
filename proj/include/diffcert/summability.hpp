#ifndef DIFFCERT_SUMMABILITY_HPP
#define DIFFCERT_SUMMABILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "diffcert/orbits.hpp"

namespace diffcert {

struct OrbitObstruction {
    Poly representative;                            // monic squarefree
    std::vector<std::pair<int, Poly>> entries;      // power -> residue numerator
};

// Canonical remainder of f modulo the image of (sigma - 1): at most one
// polar factor per orbit, plus the part the operator leaves in place (the
// polynomial part for the shift, the Laurent part around 0 for the
// dilation). Always: f == sigma(certificate) - certificate + remainder.
struct ReducedForm {
    RatFun input;
    RatFun certificate;
    RatFun remainder;
    std::vector<OrbitObstruction> orbit_obstructions;
    Poly polynomial_remainder;    // shift case: always summable, kept for reporting
    Scalar laurent_obstruction;   // q case: the x^0 coefficient of the remainder

    bool has_polar_obstruction() const { return !orbit_obstructions.empty(); }
};

ReducedForm reduce(const RatFun& f, const DifferenceOperator& op);

// Certificate g with sigma(g) - g == f, when one exists in C(x).
std::optional<RatFun> is_summable(const RatFun& f, const DifferenceOperator& op);

// The unique polynomial G with G(x+1) - G(x) == p and zero constant term.
Poly shift_antidifference(const Poly& p);

// Polar parts of f at the monic factor w: pairs (power, digit) with
// deg digit < deg w; the polar part of f at w is sum digit / w^power.
std::vector<std::pair<int, Poly>> polar_digits(const RatFun& f, const Poly& w);

// A finite coordinate system for reduced residues: one slot per orbit class
// with a power budget, plus the x^0 slot in the q-dilation case. Built
// jointly from the denominators of a family of inputs so that obstruction
// vectors of different inputs are comparable.
class ObstructionBasis {
public:
    struct Slot {
        Poly representative;
        int max_power;
    };

    static ObstructionBasis build(const std::vector<RatFun>& inputs,
                                  const DifferenceOperator& op, int extra_power = 0);

    const DifferenceOperator& op() const { return atlas_.op(); }
    const OrbitAtlas& atlas() const { return atlas_; }
    const std::vector<Slot>& slots() const { return slots_; }
    bool has_laurent_slot() const { return laurent_slot_; }

    std::size_t dimension() const { return dimension_; }
    std::size_t slot_offset(std::size_t slot_index) const { return offsets_[slot_index]; }

private:
    explicit ObstructionBasis(OrbitAtlas atlas) : atlas_(std::move(atlas)) {}

    OrbitAtlas atlas_;
    std::vector<Slot> slots_;
    std::vector<std::size_t> offsets_;
    bool laurent_slot_ = false;
    std::size_t dimension_ = 0;
};

// Linear map f -> canonical reduced residues on the basis slots; the zero
// vector exactly characterizes summability. Throws std::invalid_argument
// if f has a pole on an orbit (or with a power) the basis does not cover.
std::vector<Scalar> obstruction_vector(const RatFun& f, const ObstructionBasis& basis);

}  // namespace diffcert

#endif
