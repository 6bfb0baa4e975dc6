#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <linkhom/decide.hpp>

#include "support.hpp"

using namespace linkhom;

namespace {

const ComponentId c11{1, 1}, c21{2, 1}, c31{3, 1};
const IndexSequence kTriple{{c11, c21, c31}};

ColoredStringLink borromean(const ComponentDecomposition& l)
{
    return ColoredStringLink(
        l, testsupport::borromean_word(l.component(0), l.component(1),
                                       l.component(2)));
}

} // namespace

TEST_CASE("delta: gcd over deletions and cyclic permutations")
{
    ComponentDecomposition l({1, 1, 1});
    CHECK(delta(ColoredStringLink::trivial(l), kTriple) == 0);
    CHECK(delta(borromean(l), kTriple) == 0);

    // Linking numbers 2, 4, 6 on the three pairs.
    std::vector<GeneratorLink> word;
    for (int i = 0; i < 2; ++i)
        word.push_back(GeneratorLink::clasp(c11, c21, 1));
    for (int i = 0; i < 4; ++i)
        word.push_back(GeneratorLink::clasp(c11, c31, 1));
    for (int i = 0; i < 6; ++i)
        word.push_back(GeneratorLink::clasp(c21, c31, 1));
    ColoredStringLink a(l, word);
    CHECK(delta(a, kTriple) == 2);

    // Pairs have no shorter subsequences.
    CHECK(delta(a, IndexSequence{{c11, c21}}) == 0);

    CHECK_THROWS_AS(delta(a, IndexSequence{{c11}}), std::invalid_argument);
}

TEST_CASE("residues")
{
    ComponentDecomposition l({1, 1, 1});
    auto triv = ColoredStringLink::trivial(l);
    auto r0 = mu_bar(triv, kTriple);
    CHECK(r0.modulus == 0);
    CHECK(r0.residue == 0);

    auto rb = mu_bar(borromean(l), kTriple);
    CHECK(rb.modulus == 0);
    CHECK((rb.residue == 1 || rb.residue == -1));

    // Linking numbers 2, 4, 6 and triple coordinate adjusted to 5.
    std::vector<GeneratorLink> word;
    for (int i = 0; i < 2; ++i)
        word.push_back(GeneratorLink::clasp(c11, c21, 1));
    for (int i = 0; i < 4; ++i)
        word.push_back(GeneratorLink::clasp(c11, c31, 1));
    for (int i = 0; i < 6; ++i)
        word.push_back(GeneratorLink::clasp(c21, c31, 1));
    ColoredStringLink base(l, word);
    Int have = base.mu(kTriple);
    Int want = 5;
    long long shift = (want - have).convert_to<long long>();
    auto adjusted = word;
    for (long long i = 0; i < (shift < 0 ? -shift : shift); ++i)
        adjusted.push_back(
            GeneratorLink::clasper(kTriple, shift > 0 ? 1 : -1));
    ColoredStringLink a(l, adjusted);
    REQUIRE(a.mu(kTriple) == 5);
    auto r = mu_bar(a, kTriple);
    CHECK(r.modulus == 2);
    CHECK(r.residue == 1);
}

TEST_CASE("residues are stable under the closure moves")
{
    std::mt19937 rng(12001);
    for (int trial = 0; trial < 20; ++trial) {
        auto l = testsupport::random_decomposition(rng, 5);
        auto moves = scl_generator_set(l);
        if (moves.empty() || l.num_colors() < 3)
            continue;
        auto a = testsupport::random_link(rng, l, 6);
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        auto b = apply_scl(moves[pick(rng)], a);
        for (const auto& j : all_canonical_sequences(l)) {
            if (j.level() < 2)
                continue;
            CHECK(mu_bar(a, j) ==
                  ResidueInvariant{j, mu_bar(b, j).modulus,
                                   mu_bar(b, j).residue});
        }
    }
}

TEST_CASE("closure decision: identical inputs")
{
    ComponentDecomposition l({1, 1, 1});
    auto b = borromean(l);
    auto out = closure_equivalent(b, b, 100);
    CHECK(out.verdict == DecisionOutcome::Verdict::Equivalent);
    CHECK(out.witness.empty());
}

TEST_CASE("closure decision: borromean vs unlink is distinct")
{
    ComponentDecomposition l({1, 1, 1});
    auto out = closure_equivalent(borromean(l), ColoredStringLink::trivial(l),
                                  1000);
    REQUIRE(out.verdict == DecisionOutcome::Verdict::Distinct);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->kind == Certificate::Kind::Residue);
    CHECK(out.certificate->sequence == kTriple);
}

TEST_CASE("closure decision: moved links are equivalent with a witness")
{
    std::mt19937 rng(12002);
    for (int trial = 0; trial < 10; ++trial) {
        auto l = testsupport::random_decomposition(rng, 4);
        auto moves = scl_generator_set(l);
        if (moves.empty())
            continue;
        auto a = testsupport::random_link(rng, l, 5);
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        auto b = apply_scl(moves[pick(rng)], a);
        auto out = closure_equivalent(a, b, 5000);
        REQUIRE(out.verdict == DecisionOutcome::Verdict::Equivalent);
        // The witness replays exactly onto b's class.
        auto replayed = replay_moves(a, out.witness);
        CHECK(cl_homotopic(replayed, b));
    }
}

TEST_CASE("verdicts are monotone in the budget and deterministic")
{
    std::mt19937 rng(12003);
    ComponentDecomposition l({1, 1, 1});
    auto moves = scl_generator_set(l);
    auto a = testsupport::random_link(rng, l, 4);
    auto b = apply_scl(moves[3], apply_scl(moves[0], a));

    auto tiny = closure_equivalent(a, b, 0);
    CHECK(tiny.verdict == DecisionOutcome::Verdict::Unknown);

    auto big = closure_equivalent(a, b, 5000);
    REQUIRE(big.verdict == DecisionOutcome::Verdict::Equivalent);
    auto bigger = closure_equivalent(a, b, 10000);
    CHECK(bigger.verdict == big.verdict);
    CHECK(bigger.witness == big.witness);

    auto again = closure_equivalent(a, b, 5000);
    CHECK(again.witness == big.witness);
    CHECK(again.stats.expanded == big.stats.expanded);

    auto parallel = closure_equivalent(a, b, 5000, 4);
    CHECK(parallel.verdict == big.verdict);
    CHECK(parallel.witness == big.witness);
}

TEST_CASE("two-color inputs always resolve")
{
    std::mt19937 rng(12004);
    for (const auto& counts : {std::vector<int>{1, 1}, std::vector<int>{2, 1},
                               std::vector<int>{2, 2}}) {
        ComponentDecomposition l(counts);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = testsupport::random_link(rng, l, 5, false);
            auto b = testsupport::random_link(rng, l, 5, false);
            auto out = closure_equivalent(a, b, 1);
            CHECK(out.verdict != DecisionOutcome::Verdict::Unknown);
            bool same = cl_homotopic(a, b);
            CHECK(out.verdict == (same
                                      ? DecisionOutcome::Verdict::Equivalent
                                      : DecisionOutcome::Verdict::Distinct));
        }
    }
}

TEST_CASE("distinct certificates are fixed by every move")
{
    // Before trusting a certificate family, verify each named invariant is
    // untouched by every generator on random inputs.
    std::mt19937 rng(12005);
    ComponentDecomposition l({1, 1, 1});
    auto moves = scl_generator_set(l);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = testsupport::random_link(rng, l, 5);
        auto basis = make_basis(l);
        for (const auto& g : moves) {
            auto b = apply_scl(g, a);
            for (const auto& j : basis->keys()) {
                if (j.level() == 1)
                    CHECK(a.mu(j) == b.mu(j));
                else
                    CHECK(mu_bar(a, j) == mu_bar(b, j));
            }
        }
    }
}

TEST_CASE("graph decision")
{
    std::mt19937 rng(12006);
    ComponentDecomposition l({1, 1, 1});
    auto a = testsupport::random_link(rng, l, 4);
    auto out_same = gclosure_equivalent(a, a, 100);
    CHECK(out_same.verdict == DecisionOutcome::Verdict::Equivalent);

    auto moves = sg_generator_set(l);
    auto b = apply_sg(moves[1], a);
    auto out = gclosure_equivalent(a, b, 4000);
    REQUIRE(out.verdict == DecisionOutcome::Verdict::Equivalent);
    CHECK(!out.witness.empty());
    CHECK(cl_homotopic(replay_moves(a, out.witness), b));

    // Different linking numbers separate graphs immediately.
    ColoredStringLink one(l, {GeneratorLink::clasp(c11, c21, 1)});
    auto distinct = gclosure_equivalent(a, compose(a, one), 100);
    REQUIRE(distinct.verdict == DecisionOutcome::Verdict::Distinct);
    CHECK(distinct.certificate->kind == Certificate::Kind::Level1);
}

TEST_CASE("bouquet reduction")
{
    auto l = bouquet_reduction({{1, 3}});
    CHECK(l.counts() == std::vector<int>{3});

    auto theta = bouquet_reduction({{2, 3}});
    CHECK(theta.counts() == std::vector<int>{2});

    auto mixed = bouquet_reduction({{1, 2}, {4, 5}, {3, 3}});
    CHECK(mixed.counts() == std::vector<int>{2, 2, 1});

    // A tree contracts to a point.
    CHECK_THROWS_AS(bouquet_reduction({{4, 3}}), std::invalid_argument);
    // Too few edges to be connected.
    CHECK_THROWS_AS(bouquet_reduction({{5, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(bouquet_reduction({{0, 1}}), std::invalid_argument);
}
