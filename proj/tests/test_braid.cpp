#include "braidlab/braid.hpp"

#include <doctest.h>

#include <set>

using namespace braidlab;

namespace {

size_t binomial(size_t n, size_t k) {
    size_t r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<BraidWord> all_words(size_t strands, size_t max_len) {
    std::vector<BraidWord> out{BraidWord(strands)};
    std::vector<BraidLetter> alphabet;
    for (int i = 1; (size_t)i < strands; ++i) {
        alphabet.push_back({i, +1});
        alphabet.push_back({i, -1});
    }
    size_t begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
        size_t end = out.size();
        for (size_t w = begin; w < end; ++w)
            for (const auto& l : alphabet) {
                std::vector<BraidLetter> ls = out[w].letters();
                ls.push_back(l);
                out.push_back(BraidWord(strands, ls));
            }
        begin = end;
    }
    return out;
}

}  // namespace

TEST_CASE("matsumoto lift: identity, transposition, longest element") {
    CHECK(matsumoto_lift(Perm(3)).empty());
    BraidWord s1 = matsumoto_lift(Perm::transposition(2, 0));
    REQUIRE(s1.letters().size() == 1);
    CHECK(s1.letters()[0].i == 1);
    CHECK(s1.letters()[0].e == 1);
    // longest element of S_3, canonical reduced word from the smallest-descent rule
    Perm w0({2, 1, 0});
    BraidWord lift = matsumoto_lift(w0);
    CHECK(lift.str() == "s1.s2.s1");
    CHECK(lift.letters().size() == w0.inversions());
    CHECK(lift.letters().size() == 3);
}

TEST_CASE("matsumoto lift properties over all of S_4") {
    for (const Perm& t : all_perms(4)) {
        BraidWord w = matsumoto_lift(t);
        CHECK(w.letters().size() == t.inversions());
        CHECK(w.underlying_perm() == t);
        for (const auto& l : w.letters()) CHECK(l.e == 1);
    }
}

TEST_CASE("unshuffles: trivial edges and the (1,1) and (2,1) cases") {
    auto u0 = unshuffles(0, 3);
    REQUIRE(u0.size() == 1);
    CHECK(u0[0].is_identity());

    auto u11 = unshuffles(1, 1);
    REQUIRE(u11.size() == 2);
    CHECK(u11[0].is_identity());
    CHECK(u11[1] == Perm::transposition(2, 0));

    // oracle: enumerate S_3, keep shuffles, invert
    std::set<std::vector<int>> expected;
    for (const Perm& t : all_perms(3)) {
        bool shuffle = t(0) < t(1);  // increasing on the first 2 positions; last is free
        if (shuffle) expected.insert(t.inverse().images());
    }
    auto u21 = unshuffles(2, 1);
    CHECK(u21.size() == 3);
    std::set<std::vector<int>> got;
    for (const Perm& t : u21) got.insert(t.images());
    CHECK(got == expected);
}

TEST_CASE("term counts: binomial for shuffles, n! for the symmetrizer") {
    for (size_t p = 1; p <= 3; ++p)
        for (size_t q = 1; q <= 3; ++q)
            CHECK(shuffle_sum(p, q).term_count() == binomial(p + q, p));
    for (size_t n = 1; n <= 5; ++n) {
        size_t fact = 1;
        for (size_t i = 2; i <= n; ++i) fact *= i;
        CHECK(symmetrizer_sum(n).term_count() == fact);
    }
}

TEST_CASE("S_2 = 1 + sigma_1 and the six terms of S_3") {
    FormalBraidSum s2 = symmetrizer_sum(2);
    CHECK(s2.term_count() == 2);
    CHECK(s2.str() == "(1)*1 + (1)*s1");
    FormalBraidSum s11 = shuffle_sum(1, 1);
    CHECK(s2.terms() == s11.terms());  // S_2 = S_{1,1}

    std::set<std::string> words;
    FormalBraidSum s3 = symmetrizer_sum(3);
    for (const auto& [c, w] : s3.terms()) {
        CHECK(c == FieldScalar(1));
        words.insert(w.str());
    }
    CHECK(words == std::set<std::string>{"1", "s1", "s2", "s1.s2", "s2.s1", "s1.s2.s1"});
}

TEST_CASE("norm bracket b_4 = 1/4 (1 - s + s^2 - s^3)") {
    FormalBraidSum b = norm_bracket_sum(2);
    REQUIRE(b.term_count() == 4);
    for (const auto& [c, w] : b.terms()) {
        FieldScalar expect = (w.letters().size() % 2 == 0) ? FieldScalar(1, 4)
                                                           : FieldScalar(-1, 4);
        CHECK(c == expect);
        for (const auto& l : w.letters()) CHECK(l.i == 1);
    }
}

TEST_CASE("coshuffle sums use formal inverses") {
    FormalBraidSum sbar = coshuffle_sum(1, 1);
    CHECK(sbar.term_count() == 2);
    bool has_inverse = false;
    for (const auto& [c, w] : sbar.terms())
        for (const auto& l : w.letters())
            if (l.e == -1) has_inverse = true;
    CHECK(has_inverse);
}

TEST_CASE("formal sums normalize: canonical order, merged terms, no zeros") {
    FormalBraidSum s(2);
    BraidWord sigma(2, {{1, +1}});
    s.add_term(FieldScalar(1), sigma);
    s.add_term(FieldScalar(2), BraidWord(2));
    s.add_term(FieldScalar(-1), sigma);
    REQUIRE(s.term_count() == 1);
    CHECK(s.terms()[0].first == FieldScalar(2));
    CHECK(s.terms()[0].second.empty());
}

TEST_CASE("cabling units") {
    BraidWord unit2(2);
    CHECK(cable(unit2, unit2, 1) == BraidWord(3));
    CHECK(cable(unit2, unit2, 2) == BraidWord(3));
    // identity outer embeds the inner braid at strands i..i+n-1
    BraidWord rho(2, {{1, +1}, {1, -1}, {1, +1}});
    BraidWord embedded = cable(BraidWord(3), rho, 2);
    REQUIRE(embedded.letters().size() == 3);
    for (const auto& l : embedded.letters()) CHECK(l.i == 2);
}

TEST_CASE("cable permutation matches the strand-tracing oracle") {
    // exhaustively: outer words of length <= 2 in B_3, inner of length <= 2 in B_2
    auto outers = all_words(3, 2);
    auto inners = all_words(2, 2);
    for (const auto& gamma : outers)
        for (const auto& rho : inners)
            for (size_t i = 1; i <= 3; ++i) {
                BraidWord c = cable(gamma, rho, i);
                CHECK(c.strands() == 4);
                CHECK(c.underlying_perm() ==
                      cable_perm(gamma.underlying_perm(), rho.underlying_perm(), i));
            }
}

TEST_CASE("cable of inverse letters cancels") {
    // gamma = s1 s1^{-1} cables to a word whose permutation is trivial
    BraidWord gamma(2, {{1, +1}, {1, -1}});
    BraidWord c = cable(gamma, BraidWord(2), 1);
    CHECK(c.underlying_perm().is_identity());
}

TEST_CASE("braid word algebra: inverse and powers") {
    BraidWord w(3, {{1, +1}, {2, -1}});
    BraidWord winv = w.inverse();
    REQUIRE(winv.letters().size() == 2);
    CHECK(winv.letters()[0].i == 2);
    CHECK(winv.letters()[0].e == +1);
    CHECK(w.power(2).letters().size() == 4);
    CHECK(w.power(-1) == winv);
    CHECK((w * winv).underlying_perm().is_identity());
}
