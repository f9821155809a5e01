#include "symdelta/hopf.hpp"

#include <algorithm>
#include <bit>

#include "symdelta/text_io.hpp"

namespace symdelta {

IsoClassKey deltamatroid_class(const SetSystem& s) {
    return IsoClassKey{Side::deltamatroid, s.ground().size(), canonical_form(s).key};
}

IsoClassKey lagrangian_class(const LagrangianSubspace& l) {
    return IsoClassKey{Side::lagrangian, l.n(), canonical_form(nu(l)).key};
}

SetSystem class_representative(const IsoClassKey& k) {
    return set_system_from_key(k.bytes);
}

LagrangianSubspace lagrangian_representative(const IsoClassKey& k) {
    if (k.side != Side::lagrangian)
        throw InvalidArgument("not a Lagrangian-side class key");
    return nu_inverse(class_representative(k));
}

std::string format_class(const IsoClassKey& k) {
    SetSystem rep = class_representative(k);
    std::string family = format_family(rep);
    return std::string(k.side == Side::lagrangian ? "L" : "D") +
           std::to_string(k.degree) + "[" + (family.empty() ? "improper" : family) + "]";
}

GradedElement GradedElement::basis(const IsoClassKey& k) {
    GradedElement e(k.side);
    e.add(k, 1);
    return e;
}

void GradedElement::add(const IsoClassKey& k, const Rational& c) {
    if (k.side != side_)
        throw InvalidArgument("mixed sides in a graded element");
    Rational& slot = terms_[k];
    slot += c;
    if (slot == 0)
        terms_.erase(k);
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

GradedElement GradedElement::operator*(const Rational& c) const {
    GradedElement out(side_);
    if (c == 0)
        return out;
    for (const auto& [k, coeff] : terms_)
        out.add(k, coeff * c);
    return out;
}

void TensorElement::add(const IsoClassKey& a, const IsoClassKey& b, const Rational& c) {
    if (a.side != side_ || b.side != side_)
        throw InvalidArgument("mixed sides in a tensor element");
    Rational& slot = terms_[{a, b}];
    slot += c;
    if (slot == 0)
        terms_.erase({a, b});
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::swapped() const {
    TensorElement out(side_);
    for (const auto& [k, c] : terms_)
        out.add(k.second, k.first, c);
    return out;
}

namespace {

IsoClassKey product_of_keys(const IsoClassKey& a, const IsoClassKey& b) {
    if (a.side != b.side)
        throw InvalidArgument("product across sides");
    if (a.side == Side::deltamatroid) {
        SetSystem sum =
            direct_sum(class_representative(a), class_representative(b), /*relabel=*/true);
        return deltamatroid_class(sum);
    }
    LagrangianSubspace sum = direct_sum(lagrangian_representative(a),
                                        lagrangian_representative(b), /*relabel=*/true);
    return lagrangian_class(sum);
}

} // namespace

GradedElement product(const GradedElement& a, const GradedElement& b) {
    if (a.side() != b.side())
        throw InvalidArgument("product across sides");
    GradedElement out(a.side());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(product_of_keys(ka, kb), ca * cb);
    return out;
}

TensorElement coproduct(const GradedElement& a, const HopfOptions& opts) {
    TensorElement out(a.side());
    for (const auto& [k, c] : a.terms()) {
        if (a.side() == Side::deltamatroid) {
            SetSystem rep = class_representative(k);
            const std::uint64_t full = rep.ground().full_mask();
            for (std::uint64_t i = 0;; ++i) {
                SetSystem left = restrict_to(rep, i, opts.restrict_mode);
                SetSystem right = restrict_to(rep, full & ~i, opts.restrict_mode);
                out.add(deltamatroid_class(left), deltamatroid_class(right), c);
                if (i == full)
                    break;
            }
        } else {
            LagrangianSubspace rep = lagrangian_representative(k);
            const std::uint64_t full = rep.ground().full_mask();
            for (std::uint64_t i = 0;; ++i) {
                LagrangianSubspace left = reduce(rep, i, opts.reduce_convention);
                LagrangianSubspace right = reduce(rep, full & ~i, opts.reduce_convention);
                out.add(lagrangian_class(left), lagrangian_class(right), c);
                if (i == full)
                    break;
            }
        }
    }
    return out;
}

Rational counit(const GradedElement& a) {
    Rational total = 0;
    for (const auto& [k, c] : a.terms())
        if (k.degree == 0)
            total += c;
    return total;
}

namespace {

GradedElement antipode_of_key(const IsoClassKey& k, const HopfOptions& opts,
                              std::map<IsoClassKey, GradedElement>& memo) {
    if (k.degree == 0)
        return GradedElement::basis(k);
    auto it = memo.find(k);
    if (it != memo.end())
        return it->second;

    // S(x) = -x - sum S(x') x'' over the reduced coproduct.
    GradedElement result = GradedElement::basis(k) * Rational(-1);
    TensorElement delta = coproduct(GradedElement::basis(k), opts);
    for (const auto& [pair, c] : delta.terms()) {
        if (pair.first.degree == 0 || pair.second.degree == 0)
            continue;
        GradedElement s_left = antipode_of_key(pair.first, opts, memo);
        result -= product(s_left, GradedElement::basis(pair.second)) * c;
    }
    memo.emplace(k, result);
    return result;
}

} // namespace

GradedElement antipode(const GradedElement& a, const HopfOptions& opts) {
    std::map<IsoClassKey, GradedElement> memo;
    GradedElement out(a.side());
    for (const auto& [k, c] : a.terms())
        out += antipode_of_key(k, opts, memo) * c;
    return out;
}

TensorElement product(const TensorElement& a, const TensorElement& b) {
    if (a.side() != b.side())
        throw InvalidArgument("product across sides");
    TensorElement out(a.side());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(product_of_keys(ka.first, kb.first),
                    product_of_keys(ka.second, kb.second), ca * cb);
    return out;
}

GradedElement nu_hom(const GradedElement& a) {
    if (a.side() == Side::deltamatroid)
        return a;
    GradedElement out(Side::deltamatroid);
    for (const auto& [k, c] : a.terms())
        out.add(IsoClassKey{Side::deltamatroid, k.degree, k.bytes}, c);
    return out;
}

TensorElement nu_hom(const TensorElement& a) {
    if (a.side() == Side::deltamatroid)
        return a;
    TensorElement out(Side::deltamatroid);
    for (const auto& [k, c] : a.terms())
        out.add(IsoClassKey{Side::deltamatroid, k.first.degree, k.first.bytes},
                IsoClassKey{Side::deltamatroid, k.second.degree, k.second.bytes}, c);
    return out;
}

GradedElement four_term_element(const LagrangianSubspace& l, int e, int e_prime,
                                FourTermSign sign) {
    VassilievMove v1{VassilievMove::Kind::first, e, e_prime};
    VassilievMove v2{VassilievMove::Kind::second, e, e_prime};
    LagrangianSubspace l1 = apply_move(l, v1);
    LagrangianSubspace l2 = apply_move(l, v2);
    LagrangianSubspace l12 = apply_move(l1, v2);

    Rational s2 = sign == FourTermSign::inclusion_exclusion ? -1 : 1;
    Rational s12 = sign == FourTermSign::inclusion_exclusion ? 1 : -1;

    GradedElement out(Side::lagrangian);
    out.add(lagrangian_class(l), 1);
    out.add(lagrangian_class(l1), -1);
    out.add(lagrangian_class(l2), s2);
    out.add(lagrangian_class(l12), s12);
    return out;
}

GradedElement four_term_element_dm(const SetSystem& binary, int e, int e_prime,
                                   FourTermSign sign) {
    VassilievMove v1{VassilievMove::Kind::first, e, e_prime};
    VassilievMove v2{VassilievMove::Kind::second, e, e_prime};
    // Moves transported through nu: D -> nu(move(nu^{-1}(D))).
    auto moved = [&](const SetSystem& s, const VassilievMove& m) {
        return nu(apply_move(nu_inverse(s), m));
    };
    SetSystem d1 = moved(binary, v1);
    SetSystem d2 = moved(binary, v2);
    SetSystem d12 = moved(d1, v2);

    Rational s2 = sign == FourTermSign::inclusion_exclusion ? -1 : 1;
    Rational s12 = sign == FourTermSign::inclusion_exclusion ? 1 : -1;

    GradedElement out(Side::deltamatroid);
    out.add(deltamatroid_class(binary), 1);
    out.add(deltamatroid_class(d1), -1);
    out.add(deltamatroid_class(d2), s2);
    out.add(deltamatroid_class(d12), s12);
    return out;
}

std::vector<IsoClassKey> basis_classes(Side side, int degree) {
    std::vector<IsoClassKey> out;
    for (const auto& l : enumerate_lagrangians(GroundSet::range(degree))) {
        IsoClassKey k = side == Side::lagrangian
                            ? lagrangian_class(l)
                            : deltamatroid_class(nu(l));
        out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    int rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const std::vector<Rational>& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0)
                continue;
            Rational factor = rows[r][c] / p[c];
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] -= factor * p[j];
        }
        ++rank;
        if (static_cast<std::size_t>(rank) == rows.size())
            break;
    }
    return rank;
}

QuotientReport quotient_dimension(Side side, int n, FourTermSign sign) {
    if (n > 3)
        throw DegreeTooLarge("four-term quotients are computed for degree <= 3");

    std::vector<IsoClassKey> classes = basis_classes(side, n);
    std::map<IsoClassKey, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i)
        index[classes[i]] = i;

    std::vector<std::vector<Rational>> rows;
    for (const auto& l : enumerate_lagrangians(GroundSet::range(n))) {
        for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
                if (e == f)
                    continue;
                GradedElement rel = side == Side::lagrangian
                                        ? four_term_element(l, e, f, sign)
                                        : four_term_element_dm(nu(l), e, f, sign);
                if (rel.is_zero())
                    continue;
                std::vector<Rational> row(classes.size(), 0);
                for (const auto& [k, c] : rel.terms())
                    row[index.at(k)] = c;
                rows.push_back(std::move(row));
            }
    }

    QuotientReport report;
    report.side = side;
    report.degree = n;
    report.sign = sign;
    report.n_classes = static_cast<int>(classes.size());
    report.relation_rank = rational_rank(std::move(rows));
    report.quotient_dim = report.n_classes - report.relation_rank;
    return report;
}

} // namespace symdelta
