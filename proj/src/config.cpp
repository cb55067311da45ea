#include "poisson/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace poisson {
namespace {

constexpr std::string_view kDefaultConfig = R"(# Default run: unit interval, unit intensity, every suite.
format_version = 1

space.dimension = 1
space.sides = 1
space.mass = 1
lambda = 1

mc.n_outer = 100000
mc.seed = 42
mc.ci_level = 0.95
mc.threads = 0

quad.n_sigma = 32
quad.seed = 7
quad.mode = monte_carlo

suites = all

event.empty = count rel=eq k=0
event.one = count rel=eq k=1
event.half_ge1 = count region=0:0.5 rel=ge k=1
event.half_le1 = count region=0:0.5 rel=le k=1
event.half_eq1 = count region=0:0.5 rel=eq k=1
event.ge1 = count rel=ge k=1
event.le0 = count rel=le k=0
event.ge2 = count rel=ge k=2
event.ge3 = count rel=ge k=3
event.tenth_ge1 = count region=0:0.1 rel=ge k=1
event.sum_x = linear f=x K=0.5

boundaries.events = empty, half_eq1, half_ge1, half_le1, sum_x
margulis_russo.events = ge1, le0, half_ge1
margulis_russo.dlambda = 0.05
deviation.event = ge1
deviation.lambdas = 0.5, 1, 1.5, 2
profiles.family = empty, ge2, ge3, tenth_ge1, half_eq1
profiles.p = 1, 2, inf

clark.n_outer = 1000
clark.grids = 8, 32, 128
clark.n_inner = 200

output.dir = reports
)";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += f(v[i]);
  }
  return out;
}

std::string relation_name(Relation r) {
  return r == Relation::eq ? "eq" : r == Relation::ge ? "ge" : "le";
}

class Parser {
 public:
  Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + what);
  }

  void at(std::size_t line) { line_ = line; }

  double number(const std::string& v) const {
    if (v == "inf") return kInfinity;
    double x = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty())
      fail("expected a number, got '" + v + "'");
    return x;
  }

  std::uint64_t integer(const std::string& v) const {
    std::uint64_t x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty())
      fail("expected a non-negative integer, got '" + v + "'");
    return x;
  }

  std::vector<double> numbers(const std::string& v) const {
    std::vector<double> out;
    for (const auto& item : split(v, ',')) out.push_back(number(item));
    return out;
  }

  std::vector<std::string> names(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& item : split(v, ','))
      if (!item.empty()) out.push_back(item);
    return out;
  }

  EventDecl event(const std::string& name, const std::string& v) const {
    std::istringstream in(v);
    EventDecl d;
    d.name = name;
    in >> d.kind;
    if (d.kind != "count" && d.kind != "linear") fail("event kind must be count or linear");
    std::set<std::string> seen;
    std::string token;
    while (in >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) fail("expected key=value in event, got '" + token + "'");
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (!seen.insert(key).second) fail("duplicate event field '" + key + "'");
      if (d.kind == "count" && key == "region") d.region = value;
      else if (d.kind == "count" && key == "rel") {
        if (value == "eq") d.relation = Relation::eq;
        else if (value == "ge") d.relation = Relation::ge;
        else if (value == "le") d.relation = Relation::le;
        else fail("rel must be eq, ge or le");
      } else if (d.kind == "count" && key == "k") {
        if (!value.empty() && value[0] == '-') fail("count event needs k >= 0");
        d.k = static_cast<long>(integer(value));
      } else if (d.kind == "linear" && key == "f") d.weight = value;
      else if (d.kind == "linear" && key == "K") d.threshold = number(value);
      else fail("unknown field '" + key + "' for a " + d.kind + " event");
    }
    if (d.kind == "count" && !seen.count("k")) fail("count event needs k");
    if (d.kind == "count" && !seen.count("rel")) fail("count event needs rel");
    if (d.kind == "linear") {
      if (!seen.count("f") || !seen.count("K")) fail("linear event needs f and K");
      try {
        linear_weight(d.weight);
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    std::ostringstream spec;
    if (d.kind == "count") {
      spec << "count";
      if (!d.region.empty()) spec << " region=" << d.region;
      spec << " rel=" << relation_name(d.relation) << " k=" << d.k;
    } else {
      spec << "linear f=" << d.weight << " K=" << format_double(d.threshold);
    }
    d.spec = spec.str();
    return d;
  }

 private:
  std::string source_;
  std::size_t line_ = 0;
};

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s{"identities", "kernels",  "boundaries",
                                          "coarea",     "margulis_russo", "deviation",
                                          "profiles",   "inequalities",   "clark"};
  return s;
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  RunConfig c;
  Parser p(source);
  std::set<std::string> seen;
  bool version_seen = false;
  bool suites_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view raw = text.substr(start, end == std::string_view::npos ? end : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    p.at(++line_no);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) p.fail("expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) p.fail("empty key");
    if (!seen.insert(key).second) p.fail("duplicate key '" + key + "'");

    if (key == "format_version") {
      if (p.integer(value) != kConfigFormatVersion)
        p.fail("unsupported format_version " + value + " (expected " +
               std::to_string(kConfigFormatVersion) + ")");
      version_seen = true;
    } else if (key == "space.dimension") {
      const auto d = p.integer(value);
      if (d < 1 || d > static_cast<std::uint64_t>(kMaxDimension)) p.fail("space.dimension must be 1..3");
      c.dimension = static_cast<int>(d);
    } else if (key == "space.sides") c.sides = p.numbers(value);
    else if (key == "space.mass") c.mass = p.number(value);
    else if (key == "lambda") c.lambda = p.number(value);
    else if (key == "mc.n_outer") c.mc.n_outer = p.integer(value);
    else if (key == "mc.seed") c.mc.seed = p.integer(value);
    else if (key == "mc.ci_level") c.mc.ci_level = p.number(value);
    else if (key == "mc.threads") c.mc.threads = static_cast<unsigned>(p.integer(value));
    else if (key == "quad.n_sigma") c.quad.n_sigma_samples = p.integer(value);
    else if (key == "quad.seed") c.quad.seed = p.integer(value);
    else if (key == "quad.mode") {
      if (value == "monte_carlo") c.quad.mode = QuadMode::monte_carlo;
      else if (value == "midpoint") c.quad.mode = QuadMode::midpoint;
      else p.fail("quad.mode must be monte_carlo or midpoint");
    } else if (key == "suites") {
      suites_seen = true;
      for (const auto& s : p.names(value)) {
        if (s == "all") {
          for (const auto& k : known_suites())
            if (std::find(c.suites.begin(), c.suites.end(), k) == c.suites.end()) c.suites.push_back(k);
          continue;
        }
        if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
          p.fail("unknown suite '" + s + "'");
        if (std::find(c.suites.begin(), c.suites.end(), s) == c.suites.end()) c.suites.push_back(s);
      }
      if (c.suites.empty()) p.fail("suites must name at least one suite");
    } else if (key.rfind("event.", 0) == 0) {
      const std::string name = key.substr(6);
      if (name.empty()) p.fail("event needs a name");
      c.events.push_back(p.event(name, value));
    } else if (key == "boundaries.events") c.boundary_events = p.names(value);
    else if (key == "margulis_russo.events") c.margulis_russo_events = p.names(value);
    else if (key == "margulis_russo.dlambda") c.margulis_russo_dlambda = p.number(value);
    else if (key == "deviation.event") c.deviation_event = value;
    else if (key == "deviation.lambdas") c.deviation_lambdas = p.numbers(value);
    else if (key == "profiles.family") c.profile_family = p.names(value);
    else if (key == "profiles.p") c.profile_p = p.numbers(value);
    else if (key == "clark.n_outer") c.clark_n_outer = p.integer(value);
    else if (key == "clark.grids") {
      c.clark_grids.clear();
      for (const auto& g : p.names(value)) c.clark_grids.push_back(p.integer(g));
    } else if (key == "clark.n_inner") c.clark_n_inner = p.integer(value);
    else if (key == "output.dir") c.out_dir = value;
    else p.fail("unknown key '" + key + "'");
  }
  p.at(line_no);
  if (!version_seen) p.fail("missing format_version");
  if (!suites_seen) p.fail("missing suites");
  try {
    c.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

RunConfig default_config() { return parse_config(kDefaultConfig, "<default>"); }

void apply_environment(RunConfig& config) {
  if (const char* s = std::getenv("POISSON_SEED")) {
    const std::string v = s;
    std::uint64_t seed = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), seed);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty())
      throw ConfigError("POISSON_SEED: expected a non-negative integer, got '" + v + "'");
    config.mc.seed = seed;
  }
}

PointSpace RunConfig::space() const { return PointSpace::box(dimension, sides, mass); }

Model RunConfig::model() const { return {space(), lambda, mc, quad}; }

const EventDecl* RunConfig::find(const std::string& name) const {
  for (const auto& e : events)
    if (e.name == name) return &e;
  return nullptr;
}

Region RunConfig::region_of(const EventDecl& decl) const {
  const PointSpace s = space();
  if (decl.region.empty()) return s.whole();
  const auto axes = split(decl.region, ',');
  if (axes.size() != static_cast<std::size_t>(dimension))
    throw ConfigError("event " + decl.name + ": region needs one lo:hi per dimension");
  std::vector<double> lo, hi;
  for (const auto& a : axes) {
    const auto colon = a.find(':');
    if (colon == std::string::npos) throw ConfigError("event " + decl.name + ": region axis needs lo:hi");
    Parser p("event " + decl.name);
    lo.push_back(p.number(trim(std::string_view(a).substr(0, colon))));
    hi.push_back(p.number(trim(std::string_view(a).substr(colon + 1))));
  }
  const Region r = Region::box(lo, hi);
  if (!s.contains(r)) throw ConfigError("event " + decl.name + ": region is not inside the space");
  return r;
}

EventSet RunConfig::event(const std::string& name) const {
  const EventDecl* d = find(name);
  if (!d) throw ConfigError("unknown event '" + name + "'");
  EventSet e = d->kind == "count"
                   ? count_event(space(), region_of(*d), d->relation, d->k)
                   : linear_event(linear_weight(d->weight), d->threshold);
  e.label = d->name + ": " + e.label;
  return e;
}

void RunConfig::validate() const {
  if (suites.empty()) throw ConfigError("suites must name at least one suite");
  space();
  model().validate();
  std::set<std::string> names;
  for (const auto& e : events) {
    if (!names.insert(e.name).second) throw ConfigError("duplicate event '" + e.name + "'");
    event(e.name);
  }
  auto check_refs = [&](const std::vector<std::string>& refs, const std::string& key) {
    for (const auto& r : refs)
      if (!find(r)) throw ConfigError(key + ": unknown event '" + r + "'");
  };
  check_refs(boundary_events, "boundaries.events");
  check_refs(margulis_russo_events, "margulis_russo.events");
  check_refs(profile_family, "profiles.family");
  if (!deviation_event.empty()) check_refs({deviation_event}, "deviation.event");
  if (!(margulis_russo_dlambda > 0.0 && margulis_russo_dlambda < lambda))
    throw ConfigError("margulis_russo.dlambda must lie in (0, lambda)");
  for (double p : profile_p)
    if (!(p >= 1.0)) throw ConfigError("profiles.p entries must be >= 1");
  if (clark_n_outer < 2) throw ConfigError("clark.n_outer must be at least 2");
  for (auto m : clark_grids)
    if (m < 1) throw ConfigError("clark.grids entries must be >= 1");
  if (clark_n_inner < 1) throw ConfigError("clark.n_inner must be positive");
}

std::string RunConfig::canonical() const {
  std::ostringstream o;
  auto num = [](const double& v) { return format_double(v); };
  auto str = [](const std::string& v) { return v; };
  auto sz = [](const std::size_t& v) { return std::to_string(v); };
  o << "format_version = " << kConfigFormatVersion << "\n"
    << "space.dimension = " << dimension << "\n"
    << "space.sides = " << join<double>(sides, num) << "\n"
    << "space.mass = " << format_double(mass) << "\n"
    << "lambda = " << format_double(lambda) << "\n"
    << "mc.n_outer = " << mc.n_outer << "\n"
    << "mc.seed = " << mc.seed << "\n"
    << "mc.ci_level = " << format_double(mc.ci_level) << "\n"
    << "quad.n_sigma = " << quad.n_sigma_samples << "\n"
    << "quad.seed = " << quad.seed << "\n"
    << "quad.mode = " << (quad.mode == QuadMode::midpoint ? "midpoint" : "monte_carlo") << "\n"
    << "suites = " << join<std::string>(suites, str) << "\n";
  for (const auto& e : events) o << "event." << e.name << " = " << e.spec << "\n";
  o << "boundaries.events = " << join<std::string>(boundary_events, str) << "\n"
    << "margulis_russo.events = " << join<std::string>(margulis_russo_events, str) << "\n"
    << "margulis_russo.dlambda = " << format_double(margulis_russo_dlambda) << "\n"
    << "deviation.event = " << deviation_event << "\n"
    << "deviation.lambdas = " << join<double>(deviation_lambdas, num) << "\n"
    << "profiles.family = " << join<std::string>(profile_family, str) << "\n"
    << "profiles.p = " << join<double>(profile_p, num) << "\n"
    << "clark.n_outer = " << clark_n_outer << "\n"
    << "clark.grids = " << join<std::size_t>(clark_grids, sz) << "\n"
    << "clark.n_inner = " << clark_n_inner << "\n";
  // mc.threads and output.dir do not change results and stay out of the hash.
  return o.str();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace poisson
