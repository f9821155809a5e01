#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symdelta/correspondence.hpp"
#include "symdelta/set_system.hpp"
#include "symdelta/symplectic.hpp"

namespace symdelta {

/// Exact coefficients; every structure constant here is an integer, but rank
/// computations divide.
using Rational = boost::multiprecision::cpp_rational;

enum class Side { lagrangian, deltamatroid };

/// Isomorphism-class key.  Both sides share the canonical-form bytes of the
/// delta-matroid: Lagrangian classes are keyed through their nu image, which
/// matches classes one-to-one since nu commutes with relabeling.
struct IsoClassKey {
    Side side = Side::deltamatroid;
    int degree = 0;
    std::string bytes;

    auto operator<=>(const IsoClassKey&) const = default;
};

IsoClassKey deltamatroid_class(const SetSystem& s);
IsoClassKey lagrangian_class(const LagrangianSubspace& l);

/// Canonical representative of a class, with labels "1".."n".
SetSystem class_representative(const IsoClassKey& k);
/// Lagrangian representative (lagrangian-side keys only).
LagrangianSubspace lagrangian_representative(const IsoClassKey& k);

/// Human-readable form of a key: side, degree and canonical feasible family.
std::string format_class(const IsoClassKey& k);

/// Finitely supported rational combination of classes of one side; degrees
/// may mix.
class GradedElement {
public:
    explicit GradedElement(Side side) : side_(side) {}
    static GradedElement basis(const IsoClassKey& k);

    Side side() const { return side_; }
    const std::map<IsoClassKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const IsoClassKey& k, const Rational& c);
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    GradedElement operator*(const Rational& c) const;

    bool operator==(const GradedElement&) const = default;

private:
    Side side_;
    std::map<IsoClassKey, Rational> terms_;
};

/// Element of the tensor square.
class TensorElement {
public:
    explicit TensorElement(Side side) : side_(side) {}

    Side side() const { return side_; }
    using Key = std::pair<IsoClassKey, IsoClassKey>;
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add(const IsoClassKey& a, const IsoClassKey& b, const Rational& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    bool is_zero() const { return terms_.empty(); }
    TensorElement swapped() const;

    bool operator==(const TensorElement&) const = default;

private:
    Side side_;
    std::map<Key, Rational> terms_;
};

/// The two definitional knobs the coproduct experiment arbitrates.
struct HopfOptions {
    ReduceConvention reduce_convention = ReduceConvention::undualized_perp;
    RestrictMode restrict_mode = RestrictMode::minimal_excess;
};

/// Direct sum on class representatives, extended bilinearly.
GradedElement product(const GradedElement& a, const GradedElement& b);

/// Sum over all splits of the ground set: symplectic reductions on the
/// Lagrangian side, restrictions on the delta-matroid side.
TensorElement coproduct(const GradedElement& a, const HopfOptions& opts = {});

/// Projection onto degree zero.
Rational counit(const GradedElement& a);

/// Antipode of the connected graded bialgebra, by the usual recursion over
/// the reduced coproduct.
GradedElement antipode(const GradedElement& a, const HopfOptions& opts = {});

/// Componentwise product of tensor elements.
TensorElement product(const TensorElement& a, const TensorElement& b);

/// The graded linear map induced by nu; on basis keys it only changes the
/// side tag, which is what makes the morphism checks meaningful.
GradedElement nu_hom(const GradedElement& a);
TensorElement nu_hom(const TensorElement& a);

/// Sign conventions for the four-term combination.
enum class FourTermSign {
    /// [L] - [V1 L] - [V2 L] + [V1 V2 L]
    inclusion_exclusion,
    /// [L] - [V1 L] + [V2 L] - [V1 V2 L]
    alternating,
};

/// Four-term element at an ordered pair of distinct element indices.
GradedElement four_term_element(const LagrangianSubspace& l, int e, int e_prime,
                                FourTermSign sign = FourTermSign::inclusion_exclusion);

/// Delta-matroid-side four-term element, with moves transported through nu.
GradedElement four_term_element_dm(const SetSystem& binary, int e, int e_prime,
                                   FourTermSign sign = FourTermSign::inclusion_exclusion);

/// All degree-n basis classes of a side, sorted.
std::vector<IsoClassKey> basis_classes(Side side, int degree);

struct QuotientReport {
    Side side = Side::lagrangian;
    int degree = 0;
    FourTermSign sign = FourTermSign::inclusion_exclusion;
    int n_classes = 0;
    int relation_rank = 0;
    int quotient_dim = 0;
};

/// Dimension of degree-n classes modulo the span of all four-term elements
/// of that degree; guarded to n <= 3.
QuotientReport quotient_dimension(Side side, int n,
                                  FourTermSign sign = FourTermSign::inclusion_exclusion);

/// Rank of a rational matrix given as rows.
int rational_rank(std::vector<std::vector<Rational>> rows);

} // namespace symdelta
