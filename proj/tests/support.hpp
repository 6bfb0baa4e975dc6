// Shared test helpers: seeded random decompositions, words and links.
#ifndef LINKHOM_TESTS_SUPPORT_HPP
#define LINKHOM_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include <linkhom/linkhom.hpp>

namespace testsupport {

using namespace linkhom;

inline ComponentDecomposition random_decomposition(std::mt19937& rng,
                                                   int max_total)
{
    std::uniform_int_distribution<int> colors(1, std::min(4, max_total));
    int m = colors(rng);
    std::vector<int> counts(m, 1);
    int rest = max_total - m;
    std::uniform_int_distribution<int> pick(0, m - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    while (rest > 0 && coin(rng) == 0) {
        counts[pick(rng)] += 1;
        --rest;
    }
    return ComponentDecomposition(counts);
}

inline ComponentId random_component(std::mt19937& rng,
                                    const ComponentDecomposition& l)
{
    std::uniform_int_distribution<int> pick(0, l.total() - 1);
    return l.component(pick(rng));
}

inline FreeWord random_word(std::mt19937& rng, const ComponentDecomposition& l,
                            int length)
{
    std::uniform_int_distribution<int> pick(0, l.total() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    FreeWord w;
    for (int i = 0; i < length; ++i)
        w.push(pick(rng), sign(rng) ? 1 : -1);
    return w;
}

/// Random generator word over the decomposition: clasps with occasional
/// claspers when enough colors exist.
inline std::vector<GeneratorLink>
random_generator_word(std::mt19937& rng, const ComponentDecomposition& l,
                      int length, bool claspers_allowed = true)
{
    std::vector<GeneratorLink> word;
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 0; i < length; ++i) {
        int s = sign(rng) ? 1 : -1;
        bool use_clasper = claspers_allowed && l.num_colors() >= 3 &&
                           kind(rng) == 0;
        if (use_clasper) {
            std::uniform_int_distribution<int> level(
                2, std::min(3, l.num_colors() - 1));
            auto seqs = enumerate_canonical_sequences(l, level(rng));
            if (!seqs.empty()) {
                std::uniform_int_distribution<std::size_t> pick(
                    0, seqs.size() - 1);
                word.push_back(GeneratorLink::clasper(seqs[pick(rng)], s));
                continue;
            }
        }
        ComponentId a = random_component(rng, l);
        ComponentId b = random_component(rng, l);
        if (a == b)
            continue;
        word.push_back(GeneratorLink::clasp(a, b, s));
    }
    return word;
}

inline ColoredStringLink random_link(std::mt19937& rng,
                                     const ComponentDecomposition& l,
                                     int length, bool claspers_allowed = true)
{
    return ColoredStringLink(
        l, random_generator_word(rng, l, length, claspers_allowed));
}

/// The standard three-strand word whose pairwise invariants vanish while
/// one triple survives.
inline std::vector<GeneratorLink>
borromean_word(const ComponentId& a, const ComponentId& b,
               const ComponentId& c)
{
    return {GeneratorLink::clasp(a, c, 1), GeneratorLink::clasp(b, c, 1),
            GeneratorLink::clasp(a, c, -1), GeneratorLink::clasp(b, c, -1)};
}

} // namespace testsupport

#endif
