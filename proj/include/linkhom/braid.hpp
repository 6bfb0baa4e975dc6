#ifndef LINKHOM_BRAID_HPP
#define LINKHOM_BRAID_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkhom/decomposition.hpp"
#include "linkhom/series.hpp"
#include "linkhom/word.hpp"

namespace linkhom {

/// The action of a string link on the meridians of its bottom disk.  Each
/// generator maps to a conjugate of itself; we store the image series
/// directly, which keeps composition bounded (conjugator words would grow
/// exponentially under substitution).
class ConjugatingAutomorphism {
public:
    ConjugatingAutomorphism() = default;

    static ConjugatingAutomorphism identity(const ComponentDecomposition& l)
    {
        ConjugatingAutomorphism a;
        a.ambient_ = l;
        a.images_.reserve(l.total());
        for (int s = 0; s < l.total(); ++s)
            a.images_.push_back(TruncatedSeries::one(l) +
                                TruncatedSeries::variable(l, s));
        return a;
    }

    const ComponentDecomposition& ambient() const { return ambient_; }

    const TruncatedSeries& image(int strand) const { return images_.at(strand); }

    void set_image(int strand, TruncatedSeries s)
    {
        images_.at(strand) = std::move(s);
    }

    /// Evaluate a word letter by letter through the automorphism.
    TruncatedSeries eval(const FreeWord& w) const
    {
        TruncatedSeries out = TruncatedSeries::one(ambient_);
        for (const auto& a : w.letters()) {
            if (a.sign > 0)
                out *= images_.at(a.strand);
            else
                out *= images_.at(a.strand).inverse();
        }
        return out;
    }

    /// Extend to an algebra endomorphism: X_s -> image(x_s) - 1 on each
    /// monomial factor.
    TruncatedSeries apply(const TruncatedSeries& t) const
    {
        TruncatedSeries out(ambient_);
        for (const auto& [m, c] : t.terms()) {
            TruncatedSeries prod = TruncatedSeries::one(ambient_);
            for (int i = 0; i < m.degree(); ++i) {
                TruncatedSeries f = images_.at(m.entry(i));
                f.add(Monomial{}, -1);
                prod *= f;
                if (prod.is_zero())
                    break;
            }
            for (const auto& [pm, pc] : prod.terms())
                out.add(pm, c * pc);
        }
        return out;
    }

    bool is_identity() const
    {
        for (int s = 0; s < ambient_.total(); ++s) {
            TruncatedSeries gen = TruncatedSeries::one(ambient_) +
                                  TruncatedSeries::variable(ambient_, s);
            if (!(images_[s] == gen))
                return false;
        }
        return true;
    }

    /// String-link automorphisms fix the ordered product of all meridians.
    bool preserves_boundary() const
    {
        FreeWord b = boundary_word(ambient_);
        return eval(b) == magnus_expand(b, ambient_);
    }

    friend bool operator==(const ConjugatingAutomorphism& a,
                           const ConjugatingAutomorphism& b)
    {
        return a.ambient_ == b.ambient_ && a.images_ == b.images_;
    }

private:
    ComponentDecomposition ambient_;
    std::vector<TruncatedSeries> images_;
};

/// Stacking order: compose(phi, psi) is phi's link first (at the bottom),
/// then psi's.
inline ConjugatingAutomorphism compose(const ConjugatingAutomorphism& phi,
                                       const ConjugatingAutomorphism& psi)
{
    if (!(phi.ambient() == psi.ambient()))
        throw std::invalid_argument("automorphism ambients differ");
    ConjugatingAutomorphism out = phi;
    for (int s = 0; s < phi.ambient().total(); ++s)
        out.set_image(s, phi.apply(psi.image(s)));
    return out;
}

namespace detail {

/// One clasp of two strands, the primitive every link generator expands
/// into.  The conjugator words are the ones a clasp routed past the
/// intermediate strands induces; they fix the boundary product exactly,
/// and the +/- pairs are exact inverses.
struct ElementaryClasp {
    int lo = 0;   // smaller strand number
    int hi = 0;   // larger strand number
    int sign = 1; // +1 or -1
};

inline FreeWord between_word(int lo, int hi)
{
    FreeWord m;
    for (int s = lo + 1; s < hi; ++s)
        m.push(s, 1);
    return m;
}

/// Conjugator words (w_lo, w_hi): meridians map to w x w^{-1}.
inline std::pair<FreeWord, FreeWord> clasp_conjugators(const ElementaryClasp& e)
{
    FreeWord m = between_word(e.lo, e.hi);
    FreeWord xc = FreeWord::generator(e.lo);
    FreeWord xd = FreeWord::generator(e.hi);
    if (e.sign > 0) {
        FreeWord wlo = xc * conjugate(xd, m);
        FreeWord whi = conjugate(xc, m.inverse());
        return {wlo, whi};
    }
    FreeWord wlo = conjugate(xd.inverse(), m) * xc.inverse();
    FreeWord whi = xd.inverse() * conjugate(xc.inverse(), m.inverse()) * xd;
    return {wlo, whi};
}

} // namespace detail

/// Scans a sequence of clasps bottom to top, maintaining the running
/// automorphism and each strand's longitude.  The longitude is the
/// conjugator of the strand's meridian image: a clasp stacked on top
/// contributes its local conjugator transported through everything below,
/// multiplied on the left.  The identity image(x) = lambda x lambda^{-1}
/// holds exactly at every step.
class LongitudeScan {
public:
    explicit LongitudeScan(const ComponentDecomposition& l)
        : ambient_(l), phi_(ConjugatingAutomorphism::identity(l)),
          lambda_(l.total(), TruncatedSeries::one(l))
    {
    }

    void feed(const detail::ElementaryClasp& e)
    {
        auto [w_lo, w_hi] = detail::clasp_conjugators(e);
        TruncatedSeries t_lo = phi_.eval(w_lo);
        TruncatedSeries t_hi = phi_.eval(w_hi);
        lambda_[e.lo] = t_lo * lambda_[e.lo];
        lambda_[e.hi] = t_hi * lambda_[e.hi];
        TruncatedSeries img_lo = t_lo * phi_.image(e.lo) * t_lo.inverse();
        TruncatedSeries img_hi = t_hi * phi_.image(e.hi) * t_hi.inverse();
        phi_.set_image(e.lo, std::move(img_lo));
        phi_.set_image(e.hi, std::move(img_hi));
    }

    const ConjugatingAutomorphism& automorphism() const { return phi_; }

    /// Raw accumulated longitude of a strand (self-color content intact).
    const TruncatedSeries& raw_longitude(int strand) const
    {
        return lambda_.at(strand);
    }

    /// Longitude with the strand's own color projected away; this is the
    /// form the invariants read.
    TruncatedSeries longitude(int strand) const
    {
        return lambda_.at(strand).project_color(ambient_.color_of(strand));
    }

    const ComponentDecomposition& ambient() const { return ambient_; }

private:
    ComponentDecomposition ambient_;
    ConjugatingAutomorphism phi_;
    std::vector<TruncatedSeries> lambda_;
};

/// Automorphism of a single clasp between two distinct components; sign -1
/// gives the exact inverse.
inline ConjugatingAutomorphism clasp_automorphism(const ComponentDecomposition& l,
                                                  const ComponentId& c,
                                                  const ComponentId& d, int sign)
{
    if (c == d)
        throw std::invalid_argument("clasp needs two distinct components");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("clasp sign must be +1 or -1");
    int a = l.strand(c), b = l.strand(d);
    LongitudeScan scan(l);
    scan.feed({std::min(a, b), std::max(a, b), sign});
    return scan.automorphism();
}

/// One letter of a string-link word: either a clasp of two components or a
/// clasper indexed by a canonical sequence, with a sign.
struct GeneratorLink {
    enum class Kind { Clasp, Clasper };

    Kind kind = Kind::Clasp;
    std::vector<ComponentId> comps; // Clasp: exactly 2; Clasper: the sequence
    int sign = 1;

    static GeneratorLink clasp(const ComponentId& a, const ComponentId& b,
                               int sign = 1)
    {
        return GeneratorLink{Kind::Clasp, {a, b}, sign};
    }

    static GeneratorLink clasper(const IndexSequence& j, int sign = 1)
    {
        return GeneratorLink{Kind::Clasper, j.entries, sign};
    }

    GeneratorLink inverted() const
    {
        GeneratorLink g = *this;
        g.sign = -g.sign;
        return g;
    }

    friend bool operator==(const GeneratorLink&, const GeneratorLink&) = default;
};

inline void validate_generator(const GeneratorLink& g,
                               const ComponentDecomposition& l)
{
    if (g.sign != 1 && g.sign != -1)
        throw std::invalid_argument("generator sign must be +1 or -1");
    for (const auto& c : g.comps)
        l.require_valid(c);
    if (g.kind == GeneratorLink::Kind::Clasp) {
        if (g.comps.size() != 2)
            throw std::invalid_argument("clasp needs exactly two components");
        if (g.comps[0] == g.comps[1])
            throw std::invalid_argument("clasp needs two distinct components");
    } else {
        IndexSequence j{g.comps};
        if (!canonical_index_sequence(j, l))
            throw std::invalid_argument("clasper sequence " + to_string(j) +
                                        " is not canonical");
    }
}

/// Expand a generator into the elementary clasps the longitude scan
/// consumes.  A clasper's tail sits on its last (maximal) component and
/// traces the left-normed commutator of the preceding meridians, one clasp
/// per letter.
inline std::vector<detail::ElementaryClasp>
expand_generator(const GeneratorLink& g, const ComponentDecomposition& l)
{
    validate_generator(g, l);
    std::vector<detail::ElementaryClasp> out;
    if (g.kind == GeneratorLink::Kind::Clasp) {
        int a = l.strand(g.comps[0]);
        int b = l.strand(g.comps[1]);
        out.push_back({std::min(a, b), std::max(a, b), g.sign});
        return out;
    }
    const int tail = l.strand(g.comps.back());
    std::vector<int> prefix;
    for (std::size_t i = 0; i + 1 < g.comps.size(); ++i)
        prefix.push_back(l.strand(g.comps[i]));
    FreeWord b = left_normed_commutator(prefix);
    if (g.sign < 0)
        b = b.inverse();
    // The tail longitude accumulates upper clasps on the left, so the
    // letters are stacked in reverse to spell the commutator in order.
    const auto& letters = b.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.push_back({std::min(it->strand, tail), std::max(it->strand, tail),
                       it->sign});
    return out;
}

/// Scan a whole generator word and return each component's longitude with
/// its own color projected away.
inline std::map<ComponentId, TruncatedSeries>
longitudes(const std::vector<GeneratorLink>& word,
           const ComponentDecomposition& l)
{
    LongitudeScan scan(l);
    for (const auto& g : word)
        for (const auto& e : expand_generator(g, l))
            scan.feed(e);
    std::map<ComponentId, TruncatedSeries> out;
    for (int s = 0; s < l.total(); ++s)
        out.emplace(l.component(s), scan.longitude(s));
    return out;
}

/// Longitude system of a single clasper generator.
inline std::map<ComponentId, TruncatedSeries>
clasper_longitude(const IndexSequence& j, int sign,
                  const ComponentDecomposition& l)
{
    return longitudes({GeneratorLink::clasper(j, sign)}, l);
}

} // namespace linkhom

#endif
