#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "gentle/threads.hpp"

using namespace gentle;

namespace {

std::multiset<std::string> names(const GentlePresentation& A, const std::vector<Thread>& ts) {
    std::multiset<std::string> out;
    for (const auto& t : ts) out.insert(t.str(A));
    return out;
}

// Every arrow in exactly one permitted thread and exactly one forbidden
// thread or cycle.
void check_partition(const GentlePresentation& A) {
    ThreadSet ts = all_threads(A);
    std::map<ArrowId, int> perm_count, forb_count;
    for (const auto& t : ts.permitted)
        for (ArrowId a : t.arrows) ++perm_count[a];
    for (const auto& t : ts.forbidden_finite)
        for (ArrowId a : t.arrows) ++forb_count[a];
    for (const auto& c : ts.infinite_cycles)
        for (ArrowId a : c) ++forb_count[a];
    for (std::size_t a = 0; a < A.arrow_count(); ++a) {
        CAPTURE(A.arrow_name(static_cast<ArrowId>(a)));
        CHECK(perm_count[static_cast<ArrowId>(a)] == 1);
        CHECK(forb_count[static_cast<ArrowId>(a)] == 1);
    }
}

// Prepending or appending any arrow to a reported thread breaks it.
void check_maximality(const GentlePresentation& A) {
    ThreadSet ts = all_threads(A);
    for (const auto& t : ts.permitted) {
        if (t.is_trivial()) continue;
        for (ArrowId b : A.in_arrows(A.source(t.arrows.front())))
            CHECK(A.in_ideal(b, t.arrows.front()));
        for (ArrowId b : A.out_arrows(A.target(t.arrows.back())))
            CHECK(A.in_ideal(t.arrows.back(), b));
    }
    for (const auto& t : ts.forbidden_finite) {
        if (t.is_trivial()) continue;
        for (ArrowId b : A.in_arrows(A.source(t.arrows.front())))
            CHECK_FALSE(A.in_ideal(b, t.arrows.front()));
        for (ArrowId b : A.out_arrows(A.target(t.arrows.back())))
            CHECK_FALSE(A.in_ideal(t.arrows.back(), b));
    }
}

} // namespace

TEST_CASE("permitted threads of cyc(3)") {
    auto A = fixtures::load("cyc3");
    auto perm = permitted_threads(A);
    CHECK(names(A, perm) == std::multiset<std::string>{"al3 al1", "al2", "e(g0)"});
}

TEST_CASE("permitted threads of t9: nine, matching the marked points") {
    auto A = fixtures::load("t9");
    auto perm = permitted_threads(A);
    CHECK(perm.size() == 9);
    CHECK(names(A, perm) == std::multiset<std::string>{"c d e", "a f g", "b h i", "e(4)", "e(5)",
                                                       "e(6)", "e(7)", "e(8)", "e(9)"});
}

TEST_CASE("kron has two permitted threads and no trivial ones") {
    auto A = fixtures::load("kron");
    auto perm = permitted_threads(A);
    CHECK(names(A, perm) == std::multiset<std::string>{"b1", "b2"});
    for (const auto& t : perm) CHECK_FALSE(t.is_trivial());
}

TEST_CASE("forbidden threads of cyc(3)") {
    auto A = fixtures::load("cyc3");
    ThreadSet ts = forbidden_threads(A);
    CHECK(ts.infinite_cycles.empty());
    CHECK(names(A, ts.forbidden_finite) ==
          std::multiset<std::string>{"al1 al2 al3", "e(g1)", "e(g2)"});
}

TEST_CASE("forbidden threads of t9") {
    auto A = fixtures::load("t9");
    ThreadSet ts = forbidden_threads(A);
    REQUIRE(ts.infinite_cycles.size() == 1);
    CHECK(ts.infinite_cycles[0].size() == 3);
    CHECK(names(A, ts.forbidden_finite) == std::multiset<std::string>{
                                               "d", "e", "f", "g", "h", "i", "e(5)", "e(7)", "e(9)"});
}

TEST_CASE("forbidden threads of pt") {
    auto A = fixtures::load("pt");
    ThreadSet ts = forbidden_threads(A);
    CHECK(ts.infinite_cycles.empty());
    CHECK(names(A, ts.forbidden_finite) == std::multiset<std::string>{"e(v)"});
    CHECK(names(A, permitted_threads(A)) == std::multiset<std::string>{"e(v)"});
}

TEST_CASE("partition and maximality over the fixtures") {
    for (const char* name : {"a2", "kron", "t9", "ex72", "ex74", "cyc5", "nak4"}) {
        CAPTURE(name);
        auto A = fixtures::load(name);
        check_partition(A);
        check_maximality(A);
    }
}

TEST_CASE("permitted count equals finite forbidden count") {
    for (const char* name : {"a2", "pt", "kron", "t9", "ex72", "ex74", "cyc6", "nak5"}) {
        CAPTURE(name);
        auto A = fixtures::load(name);
        ThreadSet ts = all_threads(A);
        CHECK(ts.permitted.size() == ts.forbidden_finite.size());
    }
}

TEST_CASE("forbidden_tail bounded by containing thread length") {
    for (const char* name : {"t9", "ex72", "ex74", "cyc6"}) {
        CAPTURE(name);
        auto A = fixtures::load(name);
        ThreadSet ts = forbidden_threads(A);
        for (const auto& t : ts.forbidden_finite)
            for (std::size_t k = 0; k < t.arrows.size(); ++k) {
                Dim tail = A.forbidden_tail(t.arrows[k]);
                REQUIRE(tail.is_finite());
                CHECK(tail.value() == t.arrows.size() - k);
            }
    }
}
