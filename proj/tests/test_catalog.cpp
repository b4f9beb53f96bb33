#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "knotmosaic/catalog.hpp"
#include "support.hpp"

using namespace knotmosaic;

namespace {

const char* kSmall =
    "# two knots\n"
    "3_1;3;PD[(1,5,2,4)+,(3,1,4,6)+,(5,3,6,2)+]\n"
    "\n"
    "4_1;4;PD[(4,2,5,1)+,(8,6,1,5)+,(6,3,7,4)-,(2,7,3,8)-]\n";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::set<std::set<std::string>> kKnownCollisions = {
    {"5_1", "10_132"}, {"8_8", "10_129"}, {"8_16", "10_156"}, {"10_25", "10_56"}, {"10_40", "10_103"}};

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("full catalog loads with the expected counts") {
    const Catalog& c = kmtest::catalog();
    CHECK(c.size() == 249);
    std::map<int, int> per;
    for (const auto& e : c.entries()) ++per[e.crossing_number];
    for (int k = 3; k <= 10; ++k) CHECK(per[k] == prime_knot_count(k));
    CHECK(prime_knot_count(2) == 0);
    CHECK(prime_knot_count(11) == 0);
    CHECK(c.find("10_165") != nullptr);
    CHECK(c.find("10_166") == nullptr);
    CHECK(c.restricted(7).size() == 14);
  }

  TEST_CASE("small catalogs and load errors") {
    const CatalogOptions any{0};
    CHECK(Catalog::parse(kSmall, any).size() == 2);
    CHECK_THROWS_AS(Catalog::parse(kSmall), CatalogError);  // incomplete through 10 crossings
    CHECK_THROWS_AS(Catalog::parse("", CatalogOptions{3}), CatalogError);
    CHECK_THROWS_AS(Catalog::parse("3_1;3;PD[(1,5,2,4)+,(3,1,4,6)+,(5,3,6,2)+]\n3_1;3;PD[(1,5,2,4)+,(3,1,4,6)+,(5,3,6,2)+]",
                                   any),
                    CatalogError);
    CHECK_THROWS_AS(Catalog::parse("3_1;4;PD[(1,5,2,4)+,(3,1,4,6)+,(5,3,6,2)+]", any), CatalogError);
    CHECK_THROWS_AS(Catalog::parse("3_1;3;PD[(1,5,2,4)+,(3,1,4,6)+]", any), CatalogError);
    CHECK_THROWS_AS(Catalog::parse("hopf;2;PD[(4,1,3,2)-,(2,3,1,4)-]", any), CatalogError);
    CHECK_THROWS_AS(Catalog::parse("3_1;3", any), CatalogError);
    CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.txt"), CatalogError);
  }

  TEST_CASE("content hash") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    const CatalogOptions any{0};
    CHECK(Catalog::parse(kSmall, any).content_hash() == fnv1a64_hex(kSmall));
    CHECK(kmtest::catalog().content_hash() == fnv1a64_hex(slurp(kmtest::catalog_path())));
  }

  TEST_CASE("collision groups") {
    const auto groups = collision_report(kmtest::index());
    std::set<std::set<std::string>> got;
    for (const auto& g : groups) {
      got.insert(std::set<std::string>(g.begin(), g.end()));
      const auto key = fingerprint(kmtest::catalog().find(g.front())->reference_pd).canonical_key();
      for (const auto& name : g) {
        CHECK(fingerprint(kmtest::catalog().find(name)->reference_pd).canonical_key() == key);
      }
    }
    CHECK(got == kKnownCollisions);
    CHECK(collision_report(kmtest::index()) == groups);

    const Catalog small = kmtest::catalog().restricted(7);
    CHECK(collision_report(bootstrap_fingerprints(small)).empty());
  }

  TEST_CASE("every reference diagram identifies as its own knot") {
    std::set<std::string> colliding;
    for (const auto& g : kKnownCollisions) colliding.insert(g.begin(), g.end());
    for (const auto& e : kmtest::catalog().entries()) {
      CAPTURE(e.name);
      for (const PDCode& pd : {e.reference_pd, mirror(e.reference_pd)}) {
        const Identification id = identify(pd, kmtest::index());
        if (!colliding.contains(e.name)) {
          CHECK(id == Identification{Verdict::Prime, {e.name}});
        } else {
          const bool own_prime = id == Identification{Verdict::Prime, {e.name}};
          const bool ambiguous_with_own = id.verdict == Verdict::Ambiguous &&
                                          std::find(id.names.begin(), id.names.end(), e.name) != id.names.end();
          CHECK((own_prime || ambiguous_with_own));
        }
      }
    }
  }

  TEST_CASE("crossing bound on collision groups") {
    // A 10-crossing diagram can depict either member of {5_1, 10_132}.
    const auto& pd = kmtest::catalog().find("10_132")->reference_pd;
    const Identification id = identify(pd, kmtest::index());
    CHECK(id.verdict == Verdict::Ambiguous);
    CHECK(id.label() == "ambiguous:[5_1,10_132]");
    CHECK(identify(fingerprint(pd), 9, kmtest::index()) == Identification{Verdict::Prime, {"5_1"}});
    CHECK(identify(fingerprint(pd), 4, kmtest::index()).verdict == Verdict::Unidentified);
  }

  TEST_CASE("unknot and unknown fingerprints") {
    CHECK(identify(PDCode{}, kmtest::index()).verdict == Verdict::Unknot);
    CHECK(identify(PDCode{}, kmtest::index()).label() == "unknot");
    Fingerprint odd = fingerprint(kmtest::catalog().find("3_1")->reference_pd);
    odd.determinant = 7;
    CHECK(identify(odd, 10, kmtest::index()).verdict == Verdict::Unidentified);
    CHECK(identify(odd, 10, kmtest::index()).label() == "unknown");
  }

  TEST_CASE("fingerprint cache is reused byte for byte") {
    kmtest::TempDir dir("cache");
    const FingerprintIndex first = bootstrap_fingerprints(kmtest::catalog(), dir.path);
    const auto path = fingerprint_cache_path(kmtest::catalog(), dir.path);
    REQUIRE(std::filesystem::exists(path));
    const std::string bytes = slurp(path);
    CHECK(bytes == kmtest::index().serialize());

    const FingerprintIndex second = bootstrap_fingerprints(kmtest::catalog(), dir.path);
    CHECK(second.fingerprints() == first.fingerprints());
    CHECK(second.serialize() == bytes);
    CHECK(slurp(path) == bytes);

    // A corrupt cache is rebuilt.
    std::ofstream(path, std::ios::binary) << "garbage";
    const FingerprintIndex third = bootstrap_fingerprints(kmtest::catalog(), dir.path);
    CHECK(third.fingerprints() == first.fingerprints());
    CHECK(slurp(path) == bytes);

    CHECK_THROWS_AS(FingerprintIndex::parse(kmtest::catalog().restricted(5), bytes), CatalogError);
  }

  TEST_CASE("knot names") {
    CHECK(crossing_number_from_name("10_139") == 10);
    CHECK(crossing_number_from_name("11a_341") == 11);
    CHECK_FALSE(crossing_number_from_name("unknot").has_value());
    CHECK(knot_name_less("9_42", "10_1"));
    CHECK(knot_name_less("3_1", "4_1"));
    CHECK(knot_name_less("10_2", "10_10"));
    CHECK(knot_name_less("11a_5", "11n_1"));
    CHECK_FALSE(knot_name_less("4_1", "4_1"));
  }
}
