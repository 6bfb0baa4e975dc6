#ifndef LINKHOM_WORD_HPP
#define LINKHOM_WORD_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkhom/decomposition.hpp"

namespace linkhom {

/// One meridian generator x_{ij}.  The barred flag marks generators of the
/// doubled configuration used when describing closure moves; plain words
/// over a single decomposition leave it false.
struct GeneratorSymbol {
    ComponentId component;
    bool barred = false;

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// A freely reduced word in the meridian generators.  Letters are stored
/// as (global strand, sign); construction and every operation keep the
/// word reduced (no x x^{-1} pairs).
class FreeWord {
public:
    struct Letter {
        int strand = 0;
        int sign = 1; // +1 or -1

        friend bool operator==(const Letter&, const Letter&) = default;
    };

    FreeWord() = default;

    static FreeWord generator(int strand, int sign = 1)
    {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
        FreeWord w;
        w.letters_.push_back({strand, sign});
        return w;
    }

    static FreeWord generator(const ComponentDecomposition& l,
                              const ComponentId& c, int sign = 1)
    {
        return generator(l.strand(c), sign);
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push(int strand, int sign)
    {
        if (!letters_.empty() && letters_.back().strand == strand &&
            letters_.back().sign == -sign)
            letters_.pop_back();
        else
            letters_.push_back({strand, sign});
    }

    FreeWord& operator*=(const FreeWord& rhs)
    {
        for (const auto& a : rhs.letters_)
            push(a.strand, a.sign);
        return *this;
    }

    friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs)
    {
        lhs *= rhs;
        return lhs;
    }

    FreeWord inverse() const
    {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->strand, -it->sign});
        return w;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// by * w * by^{-1}
inline FreeWord conjugate(const FreeWord& w, const FreeWord& by)
{
    return by * w * by.inverse();
}

/// [a, b] = a b a^{-1} b^{-1}
inline FreeWord commutator(const FreeWord& a, const FreeWord& b)
{
    return a * b * a.inverse() * b.inverse();
}

/// [[...[s_1, s_2], ...], s_k] over the given strands; a single strand
/// yields just that generator.
inline FreeWord left_normed_commutator(const std::vector<int>& strands)
{
    if (strands.empty())
        throw std::invalid_argument("left-normed commutator needs a strand");
    FreeWord acc = FreeWord::generator(strands[0]);
    for (std::size_t i = 1; i < strands.size(); ++i)
        acc = commutator(acc, FreeWord::generator(strands[i]));
    return acc;
}

inline FreeWord left_normed_commutator(const ComponentDecomposition& l,
                                       const std::vector<ComponentId>& comps)
{
    std::vector<int> strands;
    strands.reserve(comps.size());
    for (const auto& c : comps)
        strands.push_back(l.strand(c));
    return left_normed_commutator(strands);
}

} // namespace linkhom

#endif
