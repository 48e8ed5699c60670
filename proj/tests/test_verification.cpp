#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omep/verification.hpp"

#include <map>

using namespace omep;

namespace {

const ClaimReport* find_claim(const std::vector<ClaimReport>& reports, const std::string& id) {
    for (const auto& c : reports)
        if (c.id == id) return &c;
    return nullptr;
}

std::size_t count_verdict(const std::vector<ClaimReport>& reports, Verdict v) {
    std::size_t n = 0;
    for (const auto& c : reports) n += c.verdict == v;
    return n;
}

}  // namespace

TEST_CASE("12-run suite") {
    const auto reports = verify_a12();
    REQUIRE(!reports.empty());

    // the documented D value is numerically impossible for the printed
    // construction; the suite must record that single claim as failing
    CHECK(count_verdict(reports, Verdict::fail) == 1);
    const ClaimReport* d = find_claim(reports, "a12.1/c-full/D");
    REQUIRE(d != nullptr);
    CHECK(d->verdict == Verdict::fail);
    CHECK(d->computed == (Rational(2) * kn(3)).str());
    CHECK(!d->notes.empty());

    for (const char* id : {"a12.1/c-full/A", "a12.1/c-full/B", "a12.1/c-full/C",
                           "a12.1/two-level-orthogonal", "a12.1/three-level-not-proportional",
                           "a12.1/total-information", "a12.1/orthogonal-through-D",
                           "a12.1/c-equals-c-after-D", "a12.1/saturated", "a12.2/c-full/F",
                           "a12.2/c-full/E", "a12.3/c-full/E", "a12.23/first-four-unchanged",
                           "a12.2/saturated", "a12.3/saturated"}) {
        const ClaimReport* c = find_claim(reports, id);
        REQUIRE_MESSAGE(c != nullptr, id);
        CHECK_MESSAGE(c->verdict == Verdict::pass, id);
    }

    // total information is 22 = 66/3, above the reference 56/3
    CHECK(find_claim(reports, "a12.1/total-information")->computed == "22");
}

TEST_CASE("8-run suite all green") {
    const auto reports = verify_a8();
    CHECK(reports.size() == 7);
    for (const auto& c : reports) CHECK_MESSAGE(c.verdict == Verdict::pass, c.id);
}

TEST_CASE("series suite in the asserted range") {
    for (std::size_t n : {5, 6})
        for (SeriesVariant v : {SeriesVariant::i, SeriesVariant::ii, SeriesVariant::iii}) {
            const auto reports = verify_series(n, v);
            for (const auto& c : reports) CHECK_MESSAGE(c.verdict == Verdict::pass, c.id);
        }

    // the n=6 reading records four 6-level factors and the rank-5 block C
    const auto r6 = verify_series(6, SeriesVariant::i);
    CHECK(find_claim(r6, "series:i:n=6/four-six-level") != nullptr);
    CHECK(find_claim(r6, "series:i:n=6/c-block-rank") != nullptr);
    CHECK(find_claim(r6, "series:i:n=6/c-block-assembly")->verdict == Verdict::pass);
}

TEST_CASE("series suite outside the asserted range records, never fails") {
    for (std::size_t n : {3, 4})
        for (SeriesVariant v : {SeriesVariant::i, SeriesVariant::ii, SeriesVariant::iii}) {
            const auto reports = verify_series(n, v);
            CHECK(count_verdict(reports, Verdict::fail) == 0);
            for (const auto& c : reports) CHECK(!c.notes.empty());
        }

    // n=3 coincides with the first 12-run plan, so its identities all hold
    const auto r3 = verify_series(3, SeriesVariant::i);
    CHECK(count_verdict(r3, Verdict::not_applicable) == 0);

    // empirically every transcribed identity also holds at n=4; the suite
    // records the outcomes with the range caveat instead of asserting them
    const auto r4 = verify_series(4, SeriesVariant::i);
    CHECK(count_verdict(r4, Verdict::fail) == 0);
    const ClaimReport* sat = find_claim(r4, "series:i:n=4/saturated");
    REQUIRE(sat != nullptr);
    CHECK(sat->verdict == Verdict::pass);
    CHECK(sat->notes == "evaluated outside the asserted range n >= 5");
}

TEST_CASE("composition suite on the catalog") {
    for (char name : {'a', 'b', 'c', 'd'}) {
        const auto reports = verify_omep_bl(catalog_design(name), std::string(1, name));
        for (const auto& c : reports) {
            CHECK_MESSAGE(c.verdict != Verdict::fail, c.id);
            CHECK_MESSAGE(c.verdict != Verdict::not_applicable, c.id);
        }
    }
    const auto ra = verify_omep_bl(catalog_design('a'), "a");
    CHECK(find_claim(ra, "omep-bl:a/spectrum")->verdict == Verdict::pass);
    CHECK(find_claim(ra, "omep-bl:a/all-but-two")->verdict == Verdict::pass);
}

TEST_CASE("composition suite on half-overlap designs") {
    for (std::size_t v = 4; v <= 9; ++v) {
        const auto reports = verify_omep_bl(half_overlap_design(v), "half:" + std::to_string(v));
        CHECK(count_verdict(reports, Verdict::fail) == 0);
        // half-overlap designs are not equireplicate, so the comparison is n/a
        const ClaimReport* abt =
            find_claim(reports, "omep-bl:half:" + std::to_string(v) + "/all-but-two");
        REQUIRE(abt != nullptr);
        CHECK(abt->verdict == Verdict::not_applicable);
        CHECK(find_claim(reports, "omep-bl:half:" + std::to_string(v) + "/c-full")->verdict ==
              Verdict::pass);
    }
}

TEST_CASE("composition suite reports preconditions instead of throwing") {
    BlockDesign disconnected;
    disconnected.treatments = 6;
    disconnected.blocks = {{0, 1, 2}, {3, 4, 5}};
    const auto reports = verify_omep_bl(disconnected, "bad");
    REQUIRE(reports.size() == 1);
    CHECK(reports.front().verdict == Verdict::not_applicable);
    CHECK(reports.front().notes == "design is disconnected");

    BlockDesign k6;
    k6.treatments = 9;
    k6.blocks = {{0, 1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8}};
    const auto r2 = verify_omep_bl(k6, "k6");
    REQUIRE(r2.size() == 1);
    CHECK(r2.front().verdict == Verdict::not_applicable);
}

TEST_CASE("reference array suite is conditional") {
    // no shape match: not applicable
    const auto na = verify_reference_l12(build_a8());
    REQUIRE(na.size() == 1);
    CHECK(na.front().verdict == Verdict::not_applicable);

    // the first 12-run plan has the right shape but different C-matrices, so
    // the conditional claims evaluate and mostly fail: the machinery works
    // without the genuine array being built in
    const auto r = verify_reference_l12(build_a12(1));
    CHECK(r.size() == 6);
    CHECK(count_verdict(r, Verdict::fail) == 4);  // all four (7/3)K_3 claims
    CHECK(find_claim(r, "l12-ref/two-level-orthogonal")->verdict == Verdict::pass);
    CHECK(find_claim(r, "l12-ref/three-level-not-proportional")->verdict == Verdict::pass);
}

TEST_CASE("aggregate suite") {
    const auto reports = verify_all();
    CHECK(reports.size() > 100);

    // ids are unique
    std::map<std::string, int> seen;
    for (const auto& c : reports) ++seen[c.id];
    for (const auto& [id, n] : seen) CHECK_MESSAGE(n == 1, id);

    // exactly one deliberate failure: the documented D value
    CHECK(count_verdict(reports, Verdict::fail) == 1);
    CHECK(find_claim(reports, "a12.1/c-full/D")->verdict == Verdict::fail);
    CHECK_FALSE(all_pass(reports));

    // determinism: two runs give identical reports
    const auto again = verify_all();
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].id == reports[i].id);
        CHECK(again[i].computed == reports[i].computed);
        CHECK(again[i].verdict == reports[i].verdict);
    }
}
