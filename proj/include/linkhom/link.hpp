#ifndef LINKHOM_LINK_HPP
#define LINKHOM_LINK_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/decomposition.hpp"
#include "linkhom/series.hpp"
#include "linkhom/word.hpp"

namespace linkhom {

/// The full list of invariant coordinates of a decomposition, shared
/// between every vector over it.
class InvariantBasis {
public:
    explicit InvariantBasis(ComponentDecomposition l)
        : ambient_(std::move(l)), keys_(all_canonical_sequences(ambient_))
    {
    }

    const ComponentDecomposition& ambient() const { return ambient_; }
    const std::vector<IndexSequence>& keys() const { return keys_; }
    std::size_t size() const { return keys_.size(); }

    std::size_t index_of(const IndexSequence& j) const
    {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] == j)
                return i;
        throw std::invalid_argument("sequence " + to_string(j) +
                                    " is not an invariant coordinate");
    }

private:
    ComponentDecomposition ambient_;
    std::vector<IndexSequence> keys_;
};

inline std::shared_ptr<const InvariantBasis>
make_basis(const ComponentDecomposition& l)
{
    return std::make_shared<InvariantBasis>(l);
}

/// The numerical homotopy invariants of a colored string link, one integer
/// per canonical sequence.  Complete: two links are CL-homotopic exactly
/// when their vectors agree.
class InvariantVector {
public:
    InvariantVector() = default;

    InvariantVector(std::shared_ptr<const InvariantBasis> basis,
                    std::vector<Int> values)
        : basis_(std::move(basis)), values_(std::move(values))
    {
        if (values_.size() != basis_->size())
            throw std::invalid_argument("invariant vector size mismatch");
    }

    const InvariantBasis& basis() const { return *basis_; }
    std::shared_ptr<const InvariantBasis> basis_ptr() const { return basis_; }
    const std::vector<Int>& values() const { return values_; }

    const Int& at(const IndexSequence& j) const
    {
        return values_[basis_->index_of(j)];
    }

    bool is_zero() const
    {
        for (const auto& v : values_)
            if (v != 0)
                return false;
        return true;
    }

    friend bool operator==(const InvariantVector& a, const InvariantVector& b)
    {
        return a.basis_->ambient() == b.basis_->ambient() &&
               a.values_ == b.values_;
    }

private:
    std::shared_ptr<const InvariantBasis> basis_;
    std::vector<Int> values_;
};

/// A colored string link presented as a word in clasp and clasper
/// generators.  Immutable after construction; the longitude system is
/// computed once on demand.
class ColoredStringLink {
public:
    explicit ColoredStringLink(ComponentDecomposition l,
                               std::vector<GeneratorLink> word = {})
        : ambient_(std::move(l)), word_(std::move(word))
    {
        for (const auto& g : word_)
            validate_generator(g, ambient_);
    }

    static ColoredStringLink trivial(const ComponentDecomposition& l)
    {
        return ColoredStringLink(l);
    }

    const ComponentDecomposition& ambient() const { return ambient_; }
    const std::vector<GeneratorLink>& word() const { return word_; }

    friend ColoredStringLink compose(const ColoredStringLink& a,
                                     const ColoredStringLink& b)
    {
        if (!(a.ambient_ == b.ambient_))
            throw std::invalid_argument("composition needs equal decompositions");
        std::vector<GeneratorLink> w = a.word_;
        w.insert(w.end(), b.word_.begin(), b.word_.end());
        return ColoredStringLink(a.ambient_, std::move(w));
    }

    ColoredStringLink inverse() const
    {
        std::vector<GeneratorLink> w;
        w.reserve(word_.size());
        for (auto it = word_.rbegin(); it != word_.rend(); ++it)
            w.push_back(it->inverted());
        return ColoredStringLink(ambient_, std::move(w));
    }

    const LongitudeScan& analysis() const
    {
        if (!scan_) {
            auto scan = std::make_shared<LongitudeScan>(ambient_);
            for (const auto& g : word_)
                for (const auto& e : expand_generator(g, ambient_))
                    scan->feed(e);
            scan_ = std::move(scan);
        }
        return *scan_;
    }

    /// Longitude of one component with its own color projected away.
    TruncatedSeries longitude(const ComponentId& c) const
    {
        return analysis().longitude(ambient_.strand(c));
    }

    const ConjugatingAutomorphism& automorphism() const
    {
        return analysis().automorphism();
    }

    /// mu for any sequence with distinct colors (canonical or not): the
    /// coefficient of the prefix monomial in the last entry's longitude.
    Int mu(const IndexSequence& j) const
    {
        if (!valid_index_sequence(j, ambient_))
            throw std::invalid_argument("invalid index sequence " + to_string(j));
        std::vector<int> prefix;
        for (std::size_t i = 0; i + 1 < j.entries.size(); ++i)
            prefix.push_back(ambient_.strand(j.entries[i]));
        return longitude(j.entries.back()).coefficient(prefix);
    }

    InvariantVector
    invariant_vector(std::shared_ptr<const InvariantBasis> basis = nullptr) const
    {
        if (basis && !(basis->ambient() == ambient_))
            throw std::invalid_argument("basis decomposition mismatch");
        if (!vector_ || (basis && basis != vector_->basis_ptr())) {
            if (!basis)
                basis = vector_ ? vector_->basis_ptr() : make_basis(ambient_);
            std::vector<Int> vals;
            vals.reserve(basis->size());
            for (const auto& j : basis->keys())
                vals.push_back(mu(j));
            vector_ = std::make_shared<InvariantVector>(basis, std::move(vals));
        }
        return *vector_;
    }

private:
    ComponentDecomposition ambient_;
    std::vector<GeneratorLink> word_;
    mutable std::shared_ptr<const LongitudeScan> scan_;
    mutable std::shared_ptr<const InvariantVector> vector_;
};

inline bool cl_homotopic(const ColoredStringLink& a, const ColoredStringLink& b)
{
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("comparison needs equal decompositions");
    auto basis = make_basis(a.ambient());
    return a.invariant_vector(basis) == b.invariant_vector(basis);
}

namespace detail {

inline long long small_exponent(const Int& x)
{
    if (x > 1000000000 || x < -1000000000)
        throw std::length_error("canonical exponent too large to spell out");
    return x.convert_to<long long>();
}

} // namespace detail

/// The canonical word with the given invariant vector: level by level, one
/// clasper power per coordinate, exponents corrected against the partial
/// product built so far.  Depends only on the vector, so it is idempotent
/// and preserves invariants by construction.
inline ColoredStringLink canonical_form_of(const InvariantVector& v)
{
    const ComponentDecomposition& l = v.basis().ambient();
    std::vector<GeneratorLink> out;
    LongitudeScan scan(l);
    std::size_t key_pos = 0;
    const auto& keys = v.basis().keys();
    for (int k = 1; k + 1 <= l.num_colors(); ++k) {
        auto level = enumerate_canonical_sequences(l, k);
        for (const auto& j : level) {
            if (keys.at(key_pos) != j)
                throw std::logic_error("basis enumeration out of order");
            std::vector<int> prefix;
            for (std::size_t i = 0; i + 1 < j.entries.size(); ++i)
                prefix.push_back(l.strand(j.entries[i]));
            int tail = l.strand(j.entries.back());
            Int cur = scan.longitude(tail).coefficient(prefix);
            Int x = v.values()[key_pos] - cur;
            ++key_pos;
            if (x == 0)
                continue;
            int sign = x > 0 ? 1 : -1;
            GeneratorLink g = (k == 1)
                                  ? GeneratorLink::clasp(j.entries[0],
                                                         j.entries[1], sign)
                                  : GeneratorLink::clasper(j, sign);
            long long reps = detail::small_exponent(x < 0 ? -x : x);
            auto elems = expand_generator(g, l);
            for (long long r = 0; r < reps; ++r) {
                out.push_back(g);
                for (const auto& e : elems)
                    scan.feed(e);
            }
        }
    }
    return ColoredStringLink(l, std::move(out));
}

inline ColoredStringLink canonical_form(const ColoredStringLink& a)
{
    return canonical_form_of(a.invariant_vector());
}

/// Remove every generator touching the given color; the rest of the word
/// is unchanged.  Together with the color's longitudes this is the
/// semidirect decomposition of the link.
inline ColoredStringLink delete_color(const ColoredStringLink& a, int color)
{
    std::vector<GeneratorLink> w;
    for (const auto& g : a.word()) {
        bool touches = false;
        for (const auto& c : g.comps)
            if (c.color == color)
                touches = true;
        if (!touches)
            w.push_back(g);
    }
    return ColoredStringLink(a.ambient(), std::move(w));
}

/// Remove every generator touching one specific component.
inline ColoredStringLink delete_component(const ColoredStringLink& a,
                                          const ComponentId& c)
{
    std::vector<GeneratorLink> w;
    for (const auto& g : a.word()) {
        bool touches = false;
        for (const auto& e : g.comps)
            if (e == c)
                touches = true;
        if (!touches)
            w.push_back(g);
    }
    return ColoredStringLink(a.ambient(), std::move(w));
}

/// Decomposition along a color: the word with that color deleted plus the
/// color's longitudes (their own color already absent).
inline std::pair<ColoredStringLink, std::vector<TruncatedSeries>>
decompose(const ColoredStringLink& a, int color)
{
    if (color < 1 || color > a.ambient().num_colors())
        throw std::invalid_argument("color out of range");
    ColoredStringLink theta = delete_color(a, color);
    std::vector<TruncatedSeries> tails;
    for (int j = 1; j <= a.ambient().count(color); ++j)
        tails.push_back(a.longitude(ComponentId{color, j}));
    return {std::move(theta), std::move(tails)};
}

/// Spell a word of clasps whose tail sits on the given strand and whose
/// projected tail longitude equals the target series.  Greedy collection:
/// peel the lowest surviving degree with left-normed commutator blocks,
/// whose leading coefficients can be read straight off the monomials that
/// start with the support minimum.
inline std::vector<GeneratorLink>
realize_tail(const ComponentDecomposition& l, const ComponentId& tail_comp,
             const TruncatedSeries& target)
{
    if (target.constant_term() != 1)
        throw std::domain_error("tail target must have constant term 1");
    const int tail = l.strand(tail_comp);
    const int tail_color = l.color_of(tail);

    std::vector<FreeWord::Letter> letters;
    auto beta = [&]() {
        LongitudeScan scan(l);
        for (const auto& a : letters)
            scan.feed({std::min(a.strand, tail), std::max(a.strand, tail),
                       a.sign});
        return scan.longitude(tail);
    };
    // A block stacked later lands on the left of the accumulated
    // longitude, so blocks are spelled in reverse and peel the residual
    // target * beta^{-1} from the left.
    auto append_word = [&](const FreeWord& w, long long reps) {
        FreeWord use = reps < 0 ? w.inverse() : w;
        long long count = reps < 0 ? -reps : reps;
        const auto& ls = use.letters();
        for (long long r = 0; r < count; ++r)
            for (auto it = ls.rbegin(); it != ls.rend(); ++it)
                letters.push_back(*it);
    };

    int guard = 2 * l.num_colors() + 2;
    int last_degree = 0;
    while (guard-- > 0) {
        TruncatedSeries rest = target * beta().inverse();
        rest.add(Monomial{}, -1);
        if (rest.is_zero())
            break;
        int d = rest.min_degree();
        if (d <= last_degree)
            throw std::logic_error("tail realization failed to make progress");
        last_degree = d;
        TruncatedSeries part = rest.degree_part(d);
        if (d == 1) {
            for (const auto& [m, c] : part.terms()) {
                int e = m.entry(0);
                if (l.color_of(e) == tail_color)
                    throw std::domain_error("tail target mentions its own color");
                append_word(FreeWord::generator(e), detail::small_exponent(c));
            }
            continue;
        }
        // Group the homogeneous part by support and peel each group with
        // the commutators [x_min, x_{p_1}, ..., x_{p_{d-1}}]; the
        // coefficient of such a block on monomials starting with the
        // minimum is exactly the identity arrangement, so the exponents
        // can be read off directly.
        for (const auto& [m, c] : part.terms()) {
            std::vector<int> entries;
            for (int i = 0; i < d; ++i)
                entries.push_back(m.entry(i));
            int lo = *std::min_element(entries.begin(), entries.end());
            if (entries[0] != lo)
                continue;
            if (l.color_of(entries[0]) == tail_color)
                throw std::domain_error("tail target mentions its own color");
            append_word(left_normed_commutator(entries),
                        detail::small_exponent(c));
        }
    }
    if (guard < 0)
        throw std::logic_error("tail realization did not terminate");

    std::vector<GeneratorLink> out;
    out.reserve(letters.size());
    for (const auto& a : letters)
        out.push_back(GeneratorLink::clasp(l.component(a.strand), tail_comp,
                                           a.sign));
    return out;
}

/// Rebuild a link from a color decomposition: the theta word followed by
/// one realized tail per strand of the removed color.  The tails do not
/// disturb each other because their mutual contributions carry the shared
/// color and vanish under projection.
inline ColoredStringLink
reassemble(const ColoredStringLink& theta, int color,
           const std::vector<TruncatedSeries>& tails)
{
    const ComponentDecomposition& l = theta.ambient();
    if (static_cast<int>(tails.size()) != l.count(color))
        throw std::invalid_argument("one tail per strand of the color required");
    std::vector<GeneratorLink> w = theta.word();
    for (int j = 1; j <= l.count(color); ++j) {
        ComponentId c{color, j};
        // The tail coordinate is read in the frame above theta and the
        // earlier tails; transport the absolute longitude back.
        ColoredStringLink sofar(l, w);
        ConjugatingAutomorphism inv = sofar.inverse().automorphism();
        TruncatedSeries target =
            inv.apply(tails[j - 1]).project_color(color);
        auto tail_word = realize_tail(l, c, target);
        w.insert(w.end(), tail_word.begin(), tail_word.end());
    }
    return ColoredStringLink(l, std::move(w));
}

} // namespace linkhom

#endif
