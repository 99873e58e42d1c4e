// Model-layer tests: URI convention, bootstrap construction, queries,
// equivalence partitioning, graph equality.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ore/datetime.hpp"
#include "ore/error.hpp"
#include "ore/model.hpp"
#include "ore/vocab.hpp"

using namespace ore;

namespace {

Iri iri(const std::string& s) { return Iri(s); }

Literal plain(const std::string& s) { return Literal{s, std::nullopt}; }

ResourceMapGraph arxiv_bootstrap() {
    return new_resource_map(iri("http://arxiv.org/rem/0801.2244v1"), iri("http://arxiv.org/"),
                            plain("2008-01-15T10:01:19Z"));
}

} // namespace

TEST_CASE("aggregation_uri appends the fragment") {
    CHECK(aggregation_uri(iri("http://arxiv.org/rem/astro-ph/0601007v2")).str() ==
          "http://arxiv.org/rem/astro-ph/0601007v2#aggregation");
    CHECK(aggregation_uri(iri("http://example.org/rem")).str() ==
          "http://example.org/rem#aggregation");
}

TEST_CASE("aggregation_uri rejects IRIs that already have a fragment") {
    try {
        aggregation_uri(iri("http://example.org/rem#x"));
        FAIL("expected fragment-present");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FragmentPresent);
    }
}

TEST_CASE("rem_uri_from_aggregation strips the fragment") {
    CHECK(rem_uri_from_aggregation(iri("http://arxiv.org/rem/astro-ph/0601007v2#aggregation"))
              .str() == "http://arxiv.org/rem/astro-ph/0601007v2");
    CHECK(rem_uri_from_aggregation(iri("http://example.org/rem#aggregation")).str() ==
          "http://example.org/rem");
}

TEST_CASE("rem_uri_from_aggregation rejects other fragments") {
    for (const char* bad : {"http://example.org/rem#other", "http://example.org/rem"}) {
        try {
            rem_uri_from_aggregation(iri(bad));
            FAIL("expected not-an-aggregation-uri for ", bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAnAggregationUri);
        }
    }
}

TEST_CASE("URI convention round-trips for random fragment-free IRIs") {
    std::mt19937 rng(20080115);
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
                                 "-._~!$&'()*+,;=:@/%?";
    for (int i = 0; i < 1000; ++i) {
        std::string s = "http://h";
        std::uniform_int_distribution<size_t> len(0, 40);
        std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
        size_t n = len(rng);
        for (size_t k = 0; k < n; ++k) s += alphabet[pick(rng)];
        Iri r(s);
        CHECK(rem_uri_from_aggregation(aggregation_uri(r)) == r);
    }
}

TEST_CASE("new_resource_map emits exactly the five bootstrap triples") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri rem = iri("http://arxiv.org/rem/0801.2244v1");
    Iri agg = aggregation_uri(rem);
    CHECK(g.size() == 5);
    CHECK(g.contains(Triple(rem, vocab::rdf_type, vocab::resource_map)));
    CHECK(g.contains(Triple(agg, vocab::rdf_type, vocab::aggregation)));
    CHECK(g.contains(Triple(rem, vocab::describes, agg)));
    CHECK(g.contains(Triple(rem, vocab::dc_creator, iri("http://arxiv.org/"))));
    CHECK(g.contains(Triple(rem, vocab::dcterms_modified, plain("2008-01-15T10:01:19Z"))));
}

TEST_CASE("new_resource_map accepts a plain-literal creator") {
    ResourceMapGraph g = new_resource_map(iri("http://e.org/r"), plain("anon"),
                                          plain("2000-01-01T00:00:00Z"));
    CHECK(g.size() == 5);
    CHECK(g.contains(Triple(iri("http://e.org/r"), vocab::dc_creator, plain("anon"))));
}

TEST_CASE("new_resource_map error cases") {
    CHECK_THROWS_AS(new_resource_map(iri("http://e.org/r#f"), plain("anon"),
                                     plain("2000-01-01T00:00:00Z")),
                    Error);
    try {
        new_resource_map(iri("http://e.org/r"), plain("anon"), plain("not a date"));
        FAIL("expected malformed-datetime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedDateTime);
    }
    try {
        new_resource_map(iri("http://e.org/r"),
                         Literal{"x", Iri("http://www.w3.org/2001/XMLSchema#string")},
                         plain("2000-01-01T00:00:00Z"));
        FAIL("expected invalid-creator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidCreator);
    }
}

TEST_CASE("add_triple has set semantics") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    Triple t(agg, vocab::aggregates, iri("http://arxiv.org/abs/0801.2244v1"));
    ResourceMapGraph g1 = add_triple(g, t);
    CHECK(g1.size() == 6);
    CHECK(g.size() == 5); // original value unchanged
    ResourceMapGraph g2 = add_triple(g1, t);
    CHECK(g2.size() == 6);
}

TEST_CASE("analogousTo triples are retrievable by query") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    Iri doi = iri("info:doi/10.1103/PhysRevD.72.095016");
    g = add_triple(g, Triple(agg, vocab::analogous_to, doi));
    auto hits = query(g, agg, vocab::analogous_to, std::nullopt);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].object.iri() == doi);
}

TEST_CASE("add_triple permutations yield graph_equal graphs") {
    ResourceMapGraph base = arxiv_bootstrap();
    Iri agg = aggregation_uri(base.rem_uri());
    std::vector<Triple> extra = {
        Triple(agg, vocab::aggregates, iri("http://arxiv.org/abs/0801.2244v1")),
        Triple(agg, vocab::aggregates, iri("http://arxiv.org/pdf/0801.2244v1")),
        Triple(agg, vocab::analogous_to, iri("info:doi/10.1103/PhysRevD.72.095016")),
        Triple(iri("http://arxiv.org/abs/0801.2244v1"), vocab::rdf_type,
               vocab::aggregated_resource),
    };
    std::mt19937 rng(7);
    ResourceMapGraph reference = base;
    for (const Triple& t : extra) reference = add_triple(reference, t);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(extra.begin(), extra.end(), rng);
        ResourceMapGraph g = base;
        for (const Triple& t : extra) g = add_triple(g, t);
        // re-add a random one: idempotent
        g = add_triple(g, extra[0]);
        CHECK(graph_equal(g, reference));
    }
}

TEST_CASE("query matches every bound position") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://arxiv.org/abs/0801.2244v1")));
    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://arxiv.org/pdf/0801.2244v1")));

    auto aggregates = query(g, agg, vocab::aggregates, std::nullopt);
    CHECK(aggregates.size() == 2);

    auto all = query(g, std::nullopt, std::nullopt, std::nullopt);
    CHECK(all.size() == g.size());
    for (const Triple& t : all) CHECK(g.contains(t));

    CHECK(query(g, std::nullopt, vocab::from_resource_map, std::nullopt).empty());
}

TEST_CASE("aggregated_resources collects IRI objects only, as a set") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    CHECK(aggregated_resources(g).empty());

    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://arxiv.org/ps/astro-ph/0601007v2")));
    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://arxiv.org/pdf/astro-ph/0601007v2")));
    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://arxiv.org/ps/astro-ph/0601007v2")));
    g = add_triple(g, Triple(agg, vocab::aggregates, plain("not a resource")));

    auto resources = aggregated_resources(g);
    CHECK(resources == std::set<Iri>{iri("http://arxiv.org/ps/astro-ph/0601007v2"),
                                     iri("http://arxiv.org/pdf/astro-ph/0601007v2")});
}

TEST_CASE("equivalents partitions sameAs and analogousTo") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    Iri doi = iri("info:doi/10.1103/PhysRevD.72.095016");
    g = add_triple(g, Triple(agg, vocab::analogous_to, doi));

    auto eq = equivalents(g, agg);
    CHECK(eq.analogous_to == std::set<Iri>{doi});
    CHECK(eq.same_as.empty());

    // sameAs is symmetric; analogousTo is reported as asserted.
    g = add_triple(g, Triple(iri("http://x.org/a"), vocab::same_as, iri("http://x.org/b")));
    auto from_object_side = equivalents(g, iri("http://x.org/b"));
    CHECK(from_object_side.same_as == std::set<Iri>{iri("http://x.org/a")});
    auto reverse = equivalents(g, doi);
    CHECK(reverse.analogous_to.empty());

    auto absent = equivalents(g, iri("http://nowhere.org/"));
    CHECK(absent.same_as.empty());
    CHECK(absent.analogous_to.empty());
}

TEST_CASE("equivalents has no substitution side channel") {
    ResourceMapGraph g = arxiv_bootstrap();
    Iri agg = aggregation_uri(g.rem_uri());
    g = add_triple(g, Triple(agg, vocab::aggregates, iri("http://e.org/member")));
    auto before = query(g, std::nullopt, std::nullopt, std::nullopt);
    (void)equivalents(g, agg);
    auto after = query(g, std::nullopt, std::nullopt, std::nullopt);
    CHECK(before == after);
}

TEST_CASE("graph_equal is reflexive and detects removals") {
    ResourceMapGraph g = arxiv_bootstrap();
    CHECK(graph_equal(g, g));

    std::set<Triple> fewer = g.triples();
    fewer.erase(fewer.begin());
    ResourceMapGraph g2(g.rem_uri(), fewer);
    CHECK_FALSE(graph_equal(g, g2));
    CHECK_FALSE(graph_equal(g2, g));
}

TEST_CASE("graph_equal normalizes dateTime literals to the same UTC instant") {
    // Both forms confirmed equal via an independent dateTime parser.
    Iri rem = iri("http://e.org/r");
    ResourceMapGraph a = new_resource_map(rem, iri("http://e.org/"), plain("2008-01-15T10:01:19Z"));
    ResourceMapGraph b(rem, {});
    for (const Triple& t : a.triples()) {
        if (t.predicate == vocab::dcterms_modified) {
            b = add_triple(b, Triple(t.subject, t.predicate, plain("2008-01-15T10:01:19+00:00")));
        } else {
            b = add_triple(b, t);
        }
    }
    CHECK(graph_equal(a, b));
    CHECK(graph_equal(b, a));
}

TEST_CASE("dateTime normalization matches the independent oracle") {
    // Expected values computed with Python datetime (UTC conversion).
    auto norm = [](const char* s) { return normalize_datetime(s).value_or("<reject>"); };
    CHECK(norm("2008-01-15T10:01:19Z") == "2008-01-15T10:01:19Z");
    CHECK(norm("2008-01-15T10:01:19+00:00") == "2008-01-15T10:01:19Z");
    CHECK(norm("2007-10-10T20:30:02+02:00") == "2007-10-10T18:30:02Z");
    CHECK(norm("2008-01-15T00:30:00+01:00") == "2008-01-14T23:30:00Z");
    CHECK(norm("2007-12-31T23:30:00-01:30") == "2008-01-01T01:00:00Z");
    CHECK(norm("2008-02-29T23:59:59-00:15") == "2008-03-01T00:14:59Z");
    CHECK(norm("2006-05-31T12:52:00Z") == "2006-05-31T12:52:00Z");
    CHECK(norm("2008-01-15T10:01:19.250Z") == "2008-01-15T10:01:19.25Z");

    CHECK_FALSE(normalize_datetime("2008-01-15T10:01:19")); // zone required
    CHECK_FALSE(normalize_datetime("2007-02-29T00:00:00Z")); // not a leap year
    CHECK_FALSE(normalize_datetime("2008-13-01T00:00:00Z"));
    CHECK_FALSE(normalize_datetime("2008-01-15"));
    CHECK_FALSE(normalize_datetime("yesterday"));
    CHECK_FALSE(normalize_datetime("2008-01-15T24:00:00Z"));
    CHECK_FALSE(normalize_datetime("2008-01-15T10:01:19Z extra"));
}

TEST_CASE("Iri validates scheme and rejects unusable characters") {
    CHECK(is_valid_iri("info:doi/10.1103/PhysRevD.72.095016"));
    CHECK(is_valid_iri("tag:arxiv.org,2007:astro-ph/0601007v2"));
    CHECK(is_valid_iri("http://arxiv.org/abs/0801.2244v1"));
    CHECK_FALSE(is_valid_iri(""));
    CHECK_FALSE(is_valid_iri("no-scheme"));
    CHECK_FALSE(is_valid_iri("1http://leading-digit/"));
    CHECK_FALSE(is_valid_iri("http://has space/"));
    CHECK_FALSE(is_valid_iri("http://angle<bracket/"));
    CHECK_THROWS_AS(Iri("relative/path"), Error);
}

TEST_CASE("Iri comparison is exact, with no normalization") {
    CHECK(Iri("http://E.org/") != Iri("http://e.org/"));
    CHECK(Iri("http://e.org/%7Ex") != Iri("http://e.org/~x"));
}

TEST_CASE("Iri host extraction") {
    CHECK(Iri("http://arxiv.org/rem/x").host() == "arxiv.org");
    CHECK(Iri("http://user@e.org:8080/x").host() == "e.org");
    CHECK(Iri("info:doi/10.1103").host().empty());
}

TEST_CASE("relative reference resolution") {
    Iri base("http://e.org/a/b?q=1");
    CHECK(resolve_reference(base, "/rem/1").str() == "http://e.org/rem/1");
    CHECK(resolve_reference(base, "c").str() == "http://e.org/a/c");
    CHECK(resolve_reference(base, "../x").str() == "http://e.org/x");
    CHECK(resolve_reference(base, "//other.org/p").str() == "http://other.org/p");
    CHECK(resolve_reference(base, "http://abs.org/z").str() == "http://abs.org/z");
    CHECK(resolve_reference(base, "?q=2").str() == "http://e.org/a/b?q=2");
    CHECK(resolve_reference(base, "#frag").str() == "http://e.org/a/b?q=1#frag");
    CHECK(resolve_reference(base, "").str() == "http://e.org/a/b?q=1");
    CHECK(resolve_reference(Iri("http://e.org"), "rem").str() == "http://e.org/rem");
}

TEST_CASE("deployed Dublin Core predicates canonicalize to the dc namespace") {
    Triple t(iri("http://e.org/r"), iri("http://purl.org/dc/elements/1.1/creator"),
             iri("http://e.org/"));
    CHECK(t.predicate == vocab::dc_creator);
    // Subjects and objects are left untouched.
    Triple u(iri("http://purl.org/dc/elements/1.1/creator"), vocab::rdf_type,
             iri("http://purl.org/dc/elements/1.1/creator"));
    CHECK(u.subject.str() == "http://purl.org/dc/elements/1.1/creator");
    CHECK(u.object.iri().str() == "http://purl.org/dc/elements/1.1/creator");
}

TEST_CASE("vocabulary markdown mirrors the constants") {
    std::string md = vocab::vocabulary_markdown();
    CHECK(md.find("http://purl.org/dc/element/1.1/") != std::string::npos);
    CHECK(md.find(vocab::describes.str()) != std::string::npos);
    CHECK(md.find(vocab::analogous_to.str()) != std::string::npos);
}
