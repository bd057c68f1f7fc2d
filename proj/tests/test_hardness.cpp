#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <treefit/error.hpp>
#include <treefit/hardness.hpp>
#include <treefit/oracle.hpp>

#include <json.hpp>

#include <map>
#include <sstream>

using namespace treefit;

namespace {

auto kind_of(const std::function<void()> & f) -> std::optional<ErrorKind>
{
    try {
        f();
    } catch (const Error & err) {
        return err.kind();
    }
    return std::nullopt;
}

}

TEST_CASE("single triple instance")
{
    ThreePartitionInstance inst{1, {3, 3, 3}, 9};
    auto out = generate_hardness_instance(inst, {1, 1});
    CHECK(out.delta == 31);
    CHECK(out.Delta == 33);
    CHECK(out.t.order() == 43);
    CHECK(out.g.order() == 5803);
    CHECK(audit(out).empty());

    auto e = forward_certificate(out, {{0, 1, 2}});
    CHECK(e.size() == 43);
    CHECK(verify_certificate(out.g, out.t, e));
    CHECK(verify_certificate(out.g, out.t, forward_certificate(out, {{2, 0, 1}})));

    CHECK(kind_of([&] { forward_certificate(out, {{0, 1, 1}}); }) == ErrorKind::InvalidPartition);
    CHECK(kind_of([&] { forward_certificate(out, {}); }) == ErrorKind::InvalidPartition);
}

TEST_CASE("invalid instances")
{
    CHECK(kind_of([] { generate_hardness_instance({1, {1, 4, 4}, 9}, {1, 1}); }) == ErrorKind::InvalidThreePartition);
    CHECK(kind_of([] { generate_hardness_instance({1, {3, 3, 4}, 9}, {1, 1}); }) == ErrorKind::InvalidThreePartition);
    CHECK(kind_of([] { generate_hardness_instance({2, {3, 3, 3}, 9}, {1, 1}); }) == ErrorKind::InvalidThreePartition);
    CHECK(kind_of([] { generate_hardness_instance({1, {3, 3, 3}, 9}, {0, 1}); }) == ErrorKind::InvalidArgument);
    // loose bounds admit the size 1
    CHECK_FALSE(kind_of([] { validate({1, {1, 4, 4}, 9}, true); }));
}

TEST_CASE("two triples, both directions")
{
    ThreePartitionInstance yes{2, {3, 4, 3, 3, 4, 3}, 10};
    auto part = find_three_partition(yes);
    REQUIRE(part);
    auto out = generate_hardness_instance(yes, {1, 2});
    CHECK(audit(out).empty());
    CHECK(out.delta == 3 * 20 + 10);
    CHECK(verify_certificate(out.g, out.t, forward_certificate(out, *part)));

    // triple sums are 12 and 14, never 13
    ThreePartitionInstance no{2, {4, 4, 4, 4, 4, 6}, 13};
    CHECK_FALSE(find_three_partition(no));
    CHECK(audit(generate_hardness_instance(no, {1, 1})).empty());
}

TEST_CASE("micro instances agree with the oracle")
{
    struct Case {
        ThreePartitionInstance inst;
        bool yes;
    };
    std::vector<Case> cases = {
        {{1, {1, 1, 1}, 3}, true},
        {{2, {1, 1, 2, 1, 1, 2}, 4}, true},
        {{2, {1, 1, 1, 1, 1, 3}, 4}, false},
    };
    for (const auto & c : cases) {
        REQUIRE(find_three_partition(c.inst).has_value() == c.yes);
        auto out = generate_hardness_instance(c.inst, {1, 1}, true);
        CHECK(audit(out).empty());
        auto got = brute_force_contains(out.g, out.t);
        CHECK(is_contains(got) == c.yes);
        if (c.yes)
            CHECK(verify_certificate(out.g, out.t, forward_certificate(out, *find_three_partition(c.inst))));
    }
}

TEST_CASE("random instances pass the audit")
{
    Rng rng(8);
    int yes = 0;
    for (int i = 0; i < 10; ++i) {
        int n = static_cast<int>(rng.between(1, 2));
        int B = std::array{7, 9, 10}[rng.below(3)];
        auto inst = random_three_partition(n, B, i % 2 == 1, rng);
        auto out = generate_hardness_instance(inst, {1, static_cast<long long>(rng.between(1, 2))});
        auto problems = audit(out);
        CHECK(problems.empty());
        if (auto part = find_three_partition(inst)) {
            ++yes;
            CHECK(verify_certificate(out.g, out.t, forward_certificate(out, *part)));
        }
    }
    CHECK(yes >= 5);
}

TEST_CASE("landmark sidecar")
{
    auto out = generate_hardness_instance({1, {1, 1, 1}, 3}, {1, 1}, true);
    std::ostringstream os;
    write_landmarks(os, out);
    std::istringstream in(os.str());
    std::string line;
    std::map<std::string, int> roles;
    int lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        roles[j["side"].get<std::string>() + ":" + j["role"].get<std::string>()]++;
        ++lines;
    }
    CHECK(lines == out.t.order() + out.g.order());
    CHECK(roles["T:r"] == 1);
    CHECK(roles["T:v"] == 3);
    CHECK(roles["T:u"] == out.Delta - 3);
    CHECK(roles["G:y"] == 3);
    CHECK(roles["G:x"] == 1);
    CHECK(roles["G:z"] == out.Delta - 3);
}

TEST_CASE("rationals and instance files")
{
    CHECK(parse_rational("1/8").den == 8);
    auto r = parse_rational("0.25");
    CHECK((r.num == 1 && r.den == 4));
    CHECK(parse_rational("2").num == 2);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_rational("-1"); }) == ErrorKind::InvalidArgument);

    ThreePartitionInstance inst{2, {7, 9, 8, 8, 7, 9}, 24};
    std::ostringstream os;
    write_three_partition(os, inst);
    std::istringstream in(os.str());
    auto back = read_three_partition(in);
    CHECK(back.sizes == inst.sizes);
    CHECK(back.B == 24);
}
