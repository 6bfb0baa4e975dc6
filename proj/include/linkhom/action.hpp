#ifndef LINKHOM_ACTION_HPP
#define LINKHOM_ACTION_HPP

#include <stdexcept>
#include <vector>

#include "linkhom/link.hpp"

namespace linkhom {

/// How a closure move conjugates the target coordinate: by the plain
/// meridian of the source (the partial-conjugation generators), by the
/// meridian transported below the rest of the link (their companions), or
/// by conjugating the whole link word (flagged, cross-validation only).
enum class MoveFrame { Plain, Transported, WholeWord };

/// A generator of the closure moves on string links: conjugates the
/// longitude coordinate of `target` by the meridian of `source`.
struct SclGenerator {
    ComponentId source;
    ComponentId target;
    int sign = 1;
    MoveFrame frame = MoveFrame::Plain;

    friend bool operator==(const SclGenerator&, const SclGenerator&) = default;
};

/// The colorwise product move used for spatial bouquet graphs: applies the
/// same source conjugation to every strand of the target color.
struct SgGenerator {
    ComponentId source;
    int target_color = 0;
    int sign = 1;

    friend bool operator==(const SgGenerator&, const SgGenerator&) = default;
};

inline void validate_scl(const SclGenerator& g, const ComponentDecomposition& l,
                         bool allow_same_color = false)
{
    l.require_valid(g.source);
    l.require_valid(g.target);
    if (g.sign != 1 && g.sign != -1)
        throw std::invalid_argument("move sign must be +1 or -1");
    if (!allow_same_color && g.source.color == g.target.color)
        throw std::invalid_argument("move source and target share a color");
}

/// Production generator set: all cross-color (source, target) pairs, both
/// signs, in lexicographic (target, source, sign) order.
inline std::vector<SclGenerator>
scl_generator_set(const ComponentDecomposition& l)
{
    std::vector<SclGenerator> out;
    for (int ti = 1; ti <= l.num_colors(); ++ti)
        for (int tj = 1; tj <= l.count(ti); ++tj)
            for (int si = 1; si <= l.num_colors(); ++si) {
                if (si == ti)
                    continue;
                for (int sj = 1; sj <= l.count(si); ++sj)
                    for (int sign : {1, -1})
                        out.push_back({ComponentId{si, sj},
                                       ComponentId{ti, tj}, sign,
                                       MoveFrame::Plain});
            }
    return out;
}

inline std::vector<SgGenerator>
sg_generator_set(const ComponentDecomposition& l)
{
    std::vector<SgGenerator> out;
    for (int ti = 1; ti <= l.num_colors(); ++ti)
        for (int si = 1; si <= l.num_colors(); ++si) {
            if (si == ti)
                continue;
            for (int sj = 1; sj <= l.count(si); ++sj)
                for (int sign : {1, -1})
                    out.push_back({ComponentId{si, sj}, ti, sign});
        }
    return out;
}

namespace detail {

/// Rebuild the color class of `target_color` from coordinate series, with
/// an optional conjugation applied to one slot.  `conjugator(slot, frame)`
/// returns the conjugating series for that slot or an empty optional.
template <typename SlotConjugation>
ColoredStringLink rebuild_color_class(const ColoredStringLink& a,
                                      int target_color,
                                      SlotConjugation&& conjugation)
{
    const ComponentDecomposition& l = a.ambient();
    auto [theta, tails] = decompose(a, target_color);
    std::vector<GeneratorLink> w = theta.word();
    for (int j = 1; j <= l.count(target_color); ++j) {
        ComponentId c{target_color, j};
        ColoredStringLink sofar(l, w);
        ConjugatingAutomorphism inv = sofar.inverse().automorphism();
        TruncatedSeries coord =
            inv.apply(tails[j - 1]).project_color(target_color);
        coord = conjugation(j, inv, std::move(coord));
        auto tail_word = realize_tail(l, c, coord);
        w.insert(w.end(), tail_word.begin(), tail_word.end());
    }
    return ColoredStringLink(l, std::move(w));
}

} // namespace detail

/// Apply one closure move and return the canonical form of the result.
/// Extended (same-color) generators are accepted when allow_same_color is
/// set; they act trivially on classes and are kept out of the production
/// set.
inline ColoredStringLink apply_scl(const SclGenerator& g,
                                   const ColoredStringLink& a,
                                   bool allow_same_color = false)
{
    const ComponentDecomposition& l = a.ambient();
    validate_scl(g, l, allow_same_color);

    if (g.frame == MoveFrame::WholeWord) {
        ColoredStringLink h(
            l, {GeneratorLink::clasp(g.source, g.target, g.sign)});
        return canonical_form(compose(compose(h, a), h.inverse()));
    }

    const int src = l.strand(g.source);
    ColoredStringLink rebuilt = detail::rebuild_color_class(
        a, g.target.color,
        [&](int slot, const ConjugatingAutomorphism& inv, TruncatedSeries coord)
            -> TruncatedSeries {
            if (slot != g.target.index)
                return coord;
            TruncatedSeries u = g.frame == MoveFrame::Plain
                                    ? TruncatedSeries::one(l) +
                                          TruncatedSeries::variable(l, src)
                                    : inv.image(src);
            if (g.sign < 0)
                u = u.inverse();
            return (u * coord * u.inverse())
                .project_color(g.target.color);
        });
    return canonical_form(rebuilt);
}

/// The colorwise move: the same source conjugation on every strand of the
/// target color, equal to the composite of the per-strand moves.
inline ColoredStringLink apply_sg(const SgGenerator& g,
                                  const ColoredStringLink& a)
{
    const ComponentDecomposition& l = a.ambient();
    l.require_valid(g.source);
    if (g.target_color < 1 || g.target_color > l.num_colors())
        throw std::invalid_argument("target color out of range");
    if (g.source.color == g.target_color)
        throw std::invalid_argument("move source and target share a color");
    ColoredStringLink cur = a;
    for (int j = 1; j <= l.count(g.target_color); ++j)
        cur = apply_scl(SclGenerator{g.source,
                                     ComponentId{g.target_color, j}, g.sign,
                                     MoveFrame::Plain},
                        cur);
    return cur;
}

/// Move-identity support: slide the end of `target` once around the
/// bouquet vertex of `loop_color`, i.e. prefix its coordinate with
/// (product of loop_color meridians, plain)^{-1} times the same product
/// transported below the rest of the link.
inline ColoredStringLink apply_vertex_loop(const ColoredStringLink& a,
                                           const ComponentId& target,
                                           int loop_color, int sign)
{
    const ComponentDecomposition& l = a.ambient();
    l.require_valid(target);
    if (loop_color < 1 || loop_color > l.num_colors() ||
        loop_color == target.color)
        throw std::invalid_argument("invalid vertex loop color");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("move sign must be +1 or -1");

    FreeWord prod;
    for (int t = 1; t <= l.count(loop_color); ++t)
        prod.push(l.strand(ComponentId{loop_color, t}), 1);

    ColoredStringLink rebuilt = detail::rebuild_color_class(
        a, target.color,
        [&](int slot, const ConjugatingAutomorphism& inv, TruncatedSeries coord)
            -> TruncatedSeries {
            if (slot != target.index)
                return coord;
            TruncatedSeries plain = magnus_expand(prod, l);
            TruncatedSeries transported = inv.eval(prod);
            TruncatedSeries p = plain.inverse() * transported;
            if (sign < 0)
                p = p.inverse();
            return (p * coord).project_color(target.color);
        });
    return canonical_form(rebuilt);
}

} // namespace linkhom

#endif
