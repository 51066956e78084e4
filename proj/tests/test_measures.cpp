#include <doctest.h>

#include <cdk/cloud_io.hpp>
#include <cdk/measure.hpp>
#include <cdk/multi_index.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"

using namespace cdk;

namespace {

MultiIndex mi(std::initializer_list<int> v) { return MultiIndex(v); }

} // namespace

TEST_CASE("graded-lex enumeration starts with the documented prefix in two variables") {
    const auto list = enumerate_monomials(MonomialOrdering::graded_lex(2), 10);
    const std::vector<MultiIndex> expect = {
        mi({0, 0}), mi({1, 0}), mi({0, 1}), mi({2, 0}), mi({1, 1}),
        mi({0, 2}), mi({3, 0}), mi({2, 1}), mi({1, 2}), mi({0, 3}),
    };
    REQUIRE(list.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(list[i] == expect[i]);
    // Degree-3 block runs z1^3, z1^2 z2, z1 z2^2, z2^3: (2,1) sits at index 7.
    CHECK(list[7] == mi({2, 1}));
    CHECK(list[9] == mi({0, 3}));
}

TEST_CASE("graded-lex enumeration in one variable is plain degree order") {
    const auto list = enumerate_monomials(MonomialOrdering::graded_lex(1), 6);
    for (int k = 0; k < 6; ++k) CHECK(list[static_cast<std::size_t>(k)] == mi({k}));
}

TEST_CASE("every enumeration prefix is downward closed and duplicate free") {
    const std::vector<MonomialOrdering> orderings = {
        MonomialOrdering::graded_lex(1), MonomialOrdering::graded_lex(2),
        MonomialOrdering::graded_lex(3), MonomialOrdering::tensor(2, 6),
        MonomialOrdering::tensor(3, 3)};
    for (const auto& ordering : orderings) {
        std::int64_t count = 200;
        if (auto cap = ordering.capacity(); cap && count > *cap) count = *cap;
        const auto list = enumerate_monomials(ordering, count);
        REQUIRE(static_cast<std::int64_t>(list.size()) == count);
        std::set<MultiIndex> seen;
        for (const auto& alpha : list) {
            CHECK(seen.insert(alpha).second); // no duplicates
            for (int j = 0; j < ordering.d; ++j) {
                if (alpha[static_cast<std::size_t>(j)] == 0) continue;
                MultiIndex down = alpha;
                --down[static_cast<std::size_t>(j)];
                CHECK(seen.count(down) == 1);
            }
        }
        // Degrees never decrease along the scan.
        for (std::size_t i = 1; i < list.size(); ++i)
            CHECK(order(list[i]) >= order(list[i - 1]));
    }
}

TEST_CASE("tensor ordering respects the box and its capacity") {
    const auto ordering = MonomialOrdering::tensor(2, 2);
    REQUIRE(ordering.capacity().has_value());
    CHECK(*ordering.capacity() == 9);
    const auto list = enumerate_monomials(ordering, 9);
    for (const auto& alpha : list)
        for (int v : alpha) CHECK(v <= 2);
    CHECK_THROWS_AS(enumerate_monomials(ordering, 10), validation_error);
}

TEST_CASE("ordering strings round trip") {
    CHECK(to_string(parse_ordering("graded-lex", 3)) == "graded-lex");
    CHECK(to_string(parse_ordering("tensor:5", 2)) == "tensor:5");
    CHECK(parse_ordering("tensor:5", 2).max_partial_degree == 5);
    CHECK_THROWS_AS(parse_ordering("lex", 2), validation_error);
    CHECK_THROWS_AS(parse_ordering("tensor:x", 2), validation_error);
    CHECK_THROWS_AS(parse_ordering("tensor:-1", 2), validation_error);
}

TEST_CASE("monomial table evaluates by single multiplications") {
    const auto table = monomial_table(MonomialOrdering::graded_lex(2), 10);
    Eigen::VectorXcd z(2);
    z << std::complex<double>(2.0, 0.0), std::complex<double>(0.0, 1.0);
    const Eigen::VectorXcd v = table.values(z);
    for (Eigen::Index k = 0; k < 10; ++k) {
        std::complex<double> expect = 1.0;
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < table.alphas[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]; ++p)
                expect *= z[j];
        CHECK(std::abs(v[k] - expect) <= 1e-14 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("normalize_cloud centers, scales and rescales mass") {
    DiscreteMeasure m;
    m.atoms.resize(2, 1);
    m.atoms(0, 0) = 0.0;
    m.atoms(1, 0) = 2.0;
    m.weights = Eigen::VectorXd::Ones(2);

    const auto [normalized, map] = normalize_cloud(m);
    CHECK(normalized.total_mass() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(normalized.atoms(0, 0) - std::complex<double>(-1.0)) < 1e-15);
    CHECK(std::abs(normalized.atoms(1, 0) - std::complex<double>(1.0)) < 1e-15);
    CHECK(map.mass_scale == doctest::Approx(0.5).epsilon(1e-15));
    // The map reproduces the normalized atoms from the originals.
    for (Eigen::Index i = 0; i < 2; ++i)
        CHECK(std::abs(map.apply(m.atom(i))[0] - normalized.atoms(i, 0)) < 1e-15);

    // A second normalization is the identity.
    const auto [again, map2] = normalize_cloud(normalized);
    CHECK(map2.is_identity(1e-14));
    (void)again;
}

TEST_CASE("normalize_cloud keeps unit scale on a degenerate coordinate") {
    DiscreteMeasure m;
    m.atoms.resize(3, 2);
    for (Eigen::Index i = 0; i < 3; ++i) {
        m.atoms(i, 0) = std::complex<double>(static_cast<double>(i), 0.0);
        m.atoms(i, 1) = std::complex<double>(4.0, 1.0); // constant coordinate
    }
    m.weights = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    const auto [normalized, map] = normalize_cloud(m);
    CHECK(std::abs(map.scale[1] - std::complex<double>(1.0)) < 1e-15);
    for (Eigen::Index i = 0; i < 3; ++i)
        CHECK(std::abs(normalized.atoms(i, 1)) < 1e-14); // centered to zero
}

TEST_CASE("affine map applies and inverts") {
    AffineMap map;
    map.scale.resize(2);
    map.shift.resize(2);
    map.scale << std::complex<double>(2.0, 0.0), std::complex<double>(0.0, 1.0);
    map.shift << std::complex<double>(1.0, -1.0), std::complex<double>(0.5, 0.0);
    map.mass_scale = 3.0;
    oracle::Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        Eigen::VectorXcd z(2);
        z << rng.box(), rng.box();
        const Eigen::VectorXcd back = map.invert(map.apply(z));
        CHECK((back - z).norm() < 1e-14);
    }
}

TEST_CASE("measure validation names duplicate atoms and bad weights") {
    DiscreteMeasure m;
    m.atoms.resize(3, 1);
    m.atoms(0, 0) = std::complex<double>(1.0, 2.0);
    m.atoms(1, 0) = std::complex<double>(0.0, 0.0);
    m.atoms(2, 0) = std::complex<double>(1.0, 2.0);
    m.weights = Eigen::VectorXd::Ones(3);
    CHECK_THROWS_WITH_AS(m.validate(), "atoms 0 and 2 coincide", validation_error);

    m.atoms(2, 0) = std::complex<double>(3.0, 0.0);
    m.weights[1] = 0.0;
    CHECK_THROWS_WITH_AS(m.validate(), "weight 1 is not strictly positive", validation_error);
}

TEST_CASE("csv clouds parse, default weights and report line numbers") {
    const std::string text =
        "# comment line\n"
        "re1,im1\n"
        "0.5,0.25  # trailing comment\n"
        "-1,2\n";
    const DiscreteMeasure m = parse_cloud_csv(text);
    REQUIRE(m.size() == 2);
    CHECK(m.dim() == 1);
    CHECK(m.atoms(0, 0) == std::complex<double>(0.5, 0.25));
    CHECK(m.atoms(1, 0) == std::complex<double>(-1.0, 2.0));
    CHECK(m.weights[0] == doctest::Approx(0.5));
    CHECK(m.weights[1] == doctest::Approx(0.5));

    // Malformed rows name their line.
    const std::string bad = "re1,im1\n1,0\nbad,0\n";
    CHECK_THROWS_WITH_AS(parse_cloud_csv(bad), "line 3: cannot parse coordinate 'bad'",
                         validation_error);
    const std::string short_row = "re1,im1\n1\n";
    CHECK_THROWS_WITH_AS(parse_cloud_csv(short_row), "line 2: expected 2 fields, got 1",
                         validation_error);
    const std::string bad_header = "x,y\n1,0\n";
    CHECK_THROWS_AS(parse_cloud_csv(bad_header), validation_error);
}

TEST_CASE("csv round trip preserves every bit") {
    oracle::Rng rng(3);
    DiscreteMeasure m = oracle::random_cloud(rng, 2, 17, true);
    const std::string once = format_cloud_csv(m);
    const DiscreteMeasure parsed = parse_cloud_csv(once);
    REQUIRE(parsed.size() == m.size());
    CHECK(parsed.atoms == m.atoms);
    CHECK(parsed.weights == m.weights);
    CHECK(format_cloud_csv(parsed) == once);
}

TEST_CASE("json clouds parse and round trip") {
    const std::string text =
        R"({"d": 1, "atoms": [[0.5, 0.25], [-1.0, 2.0]], "weights": [0.75, 0.25]})";
    const DiscreteMeasure m = parse_cloud_json(text);
    REQUIRE(m.size() == 2);
    CHECK(m.atoms(0, 0) == std::complex<double>(0.5, 0.25));
    CHECK(m.weights[0] == 0.75);

    const std::string out = format_cloud_json(m);
    const DiscreteMeasure parsed = parse_cloud_json(out);
    CHECK(parsed.atoms == m.atoms);
    CHECK(parsed.weights == m.weights);

    CHECK_THROWS_AS(parse_cloud_json("{\"d\": 1}"), validation_error);
    CHECK_THROWS_AS(parse_cloud_json("not json"), validation_error);
    // Defaulted weights.
    const DiscreteMeasure dflt = parse_cloud_json(R"({"d": 1, "atoms": [[0,0],[1,0]]})");
    CHECK(dflt.weights[0] == doctest::Approx(0.5));
}

TEST_CASE("duplicate atoms are rejected at ingestion") {
    const std::string text = "re1,im1\n1,2\n1,2\n";
    CHECK_THROWS_WITH_AS(parse_cloud_csv(text), "atoms 0 and 1 coincide", validation_error);
}

TEST_CASE("load and save dispatch on extension") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cdk-io-test";
    fs::create_directories(dir);
    oracle::Rng rng(5);
    const DiscreteMeasure m = oracle::random_cloud(rng, 1, 9, true);

    save_cloud(m, dir / "cloud.csv");
    save_cloud(m, dir / "cloud.json");
    const DiscreteMeasure from_csv = load_cloud(dir / "cloud.csv");
    const DiscreteMeasure from_json = load_cloud(dir / "cloud.json");
    CHECK(from_csv.atoms == m.atoms);
    CHECK(from_json.atoms == m.atoms);
    CHECK_THROWS_AS(load_cloud(dir / "missing.csv"), validation_error);
    fs::remove_all(dir);
}

TEST_CASE("embed_real_pairs maps coordinate pairs to complex atoms") {
    Eigen::MatrixXd cloud(2, 4);
    cloud << 1.0, 2.0, 3.0, 4.0,
             -1.0, 0.5, 0.0, -2.0;
    const DiscreteMeasure m = embed_real_pairs(cloud);
    REQUIRE(m.dim() == 2);
    CHECK(m.atoms(0, 0) == std::complex<double>(1.0, 2.0));
    CHECK(m.atoms(0, 1) == std::complex<double>(3.0, 4.0));
    CHECK(m.atoms(1, 1) == std::complex<double>(0.0, -2.0));
    CHECK(m.weights[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(embed_real_pairs(Eigen::MatrixXd::Zero(2, 3)), validation_error);
}
