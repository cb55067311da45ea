#include <cstdlib>
#include <string>

#include "helpers.hpp"
#include "poisson/config.hpp"

using namespace poisson;

namespace {

const std::string kMinimal = "format_version = 1\nsuites = identities\n";

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "t.conf");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal and default configurations") {
  const RunConfig c = parse_config(kMinimal);
  CHECK(c.suites == std::vector<std::string>{"identities"});
  CHECK(c.mc.n_outer == McSpec{}.n_outer);
  const RunConfig d = default_config();
  CHECK(d.suites == known_suites());
  CHECK(d.mc.seed == 42);
  CHECK(d.mc.n_outer == 100000);
  CHECK(d.lambda == 1.0);
  CHECK(d.events.size() == 11);
  CHECK(d.event("half_ge1").contains(Configuration::from_points(1, {{0.2, 0, 0}})));
  CHECK(d.find("sum_x")->kind == "linear");
  CHECK(d.space().total_mass() == 1.0);
  CHECK(d.model().quad.seed == 7);
}

TEST_CASE("the bundled default file matches the built-in default") {
  const RunConfig file = load_config(std::string(POISSON_SOURCE_DIR) + "/configs/default.conf");
  CHECK(file.canonical() == default_config().canonical());
  CHECK(fnv1a(file.canonical()) == fnv1a(default_config().canonical()));
}

TEST_CASE("errors carry the line") {
  CHECK(error_of("format_version = 1\nsuites =\n").rfind("t.conf:2:", 0) == 0);
  CHECK(error_of("format_version = 1\nsuites = identities\nbogus = 3\n").rfind("t.conf:3:", 0) == 0);
  CHECK(error_of("format_version = 2\nsuites = identities\n").rfind("t.conf:1:", 0) == 0);
  CHECK(error_of("format_version = 1\nsuites = nope\n").find("unknown suite") != std::string::npos);
  CHECK(error_of("format_version = 1\n\nsuites = identities\nlambda = x\n").rfind("t.conf:4:", 0) == 0);
  CHECK(error_of("format_version = 1\nsuites = identities\nevent.a = count rel=ge k=-1\n").rfind("t.conf:3:", 0) == 0);
  CHECK(error_of("format_version = 1\nsuites = identities\nevent.a = count rel=gt k=1\n") != "");
  CHECK(error_of("format_version = 1\nsuites = identities\nevent.a = linear f=cubic K=1\n") != "");
  CHECK(error_of("format_version = 1\nsuites = identities\nlambda = 1\nlambda = 2\n").find("duplicate") != std::string::npos);
  CHECK(error_of("suites = identities\n").find("format_version") != std::string::npos);
  CHECK(error_of("format_version = 1\n").find("suites") != std::string::npos);
  CHECK(error_of("format_version = 1\nsuites = boundaries\nboundaries.events = ghost\n") != "");
  CHECK(error_of("format_version = 1\nsuites = identities\nmc.n_outer = 1\n") != "");
  CHECK(error_of("format_version = 1\nsuites = identities\nno equals sign\n").rfind("t.conf:3:", 0) == 0);
  CHECK_THROWS_AS(load_config("/nonexistent/poisson.conf"), ConfigError);
}

TEST_CASE("comments, events and canonical text") {
  const std::string text =
      "# header\nformat_version = 1  # trailing\nsuites = kernels, identities\n"
      "space.sides = 2\nspace.mass = 3\n"
      "event.a = count region=0:0.5 rel=le k=2\nevent.b = linear f=neg_x K=-0.25\n"
      "profiles.p = 1, inf\nmc.threads = 3\noutput.dir = elsewhere\n";
  const RunConfig c = parse_config(text);
  CHECK(c.suites == std::vector<std::string>{"kernels", "identities"});
  CHECK(c.space().sigma_measure(c.region_of(*c.find("a"))) == doctest::Approx(0.75));
  CHECK(c.event("b").monotone == Monotonicity::decreasing);
  CHECK(c.profile_p.back() == kInfinity);
  // thread count and output directory do not change the run
  RunConfig other = c;
  other.mc.threads = 1;
  other.out_dir = "x";
  CHECK(other.canonical() == c.canonical());
  other.mc.seed = 1;
  CHECK(other.canonical() != c.canonical());
  CHECK(parse_config(c.canonical()).canonical() == c.canonical());
}

TEST_CASE("seed override from the environment") {
  RunConfig c = parse_config(kMinimal);
  ::setenv("POISSON_SEED", "1234", 1);
  apply_environment(c);
  CHECK(c.mc.seed == 1234);
  ::setenv("POISSON_SEED", "abc", 1);
  CHECK_THROWS_AS(apply_environment(c), ConfigError);
  ::unsetenv("POISSON_SEED");
  apply_environment(c);
  CHECK(c.mc.seed == 1234);
}

TEST_CASE("hash") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
