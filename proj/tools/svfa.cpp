#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "svfa/error.hpp"
#include "svfa/scenario.hpp"

namespace {

using svfa::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitMalformed = 2;

struct Global {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  bool parallel = false;
  bool no_timing = false;

  svfa::RunOptions run_options() const { return {parallel, !no_timing, seed, trials}; }
};

/// Inline JSON, or @path to read it from a file.
Json json_arg(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw svfa::Error(svfa::ErrorKind::ParseError, "cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw svfa::Error(svfa::ErrorKind::ParseError, what + ": " + e.what());
  }
}

/// Object description from either --object or the --family shorthand.
struct ObjectArgs {
  std::string object;
  std::string family;
  std::vector<double> radii;
  std::vector<double> points;
  std::vector<std::string> members;

  void attach(CLI::App* cmd) {
    cmd->add_option("--object", object, "object description as JSON, or @file");
    cmd->add_option("--family", family, "radial family shorthand, e.g. OPEN_INNER");
    cmd->add_option("--radii", radii, "radii for a radial family")->delimiter(',');
    cmd->add_option("--points", points, "reals for the POINT family")->delimiter(',');
    cmd->add_option("--members", members, "member ids for the CONSTANT family")->delimiter(',');
  }

  Json build() const {
    if (!object.empty()) return json_arg(object, "--object");
    if (family.empty()) throw svfa::Error(svfa::ErrorKind::ParseError, "give --object or --family");
    Json j{{"family", family}};
    if (!radii.empty()) j["radii"] = radii;
    if (!points.empty()) j["points"] = points;
    if (!members.empty()) j["members"] = members;
    return j;
  }
};

int emit(const svfa::RunReport& report, const Global& g) {
  if (g.format == "text") {
    std::cout << svfa::render_text(report);
  } else {
    std::cout << report.json.dump(2) << "\n";
  }
  return report.passed ? kExitPass : kExitFail;
}

int run_single(const std::string& command, const Json& object, Json args, const Global& g) {
  Json task{{"name", command}, {"command", command}};
  if (!object.is_null()) task["object"] = "object";
  if (!args.empty()) task["args"] = std::move(args);
  Json scenario{{"version", std::string(svfa::kScenarioVersion)}, {"tasks", Json::array({task})}};
  if (!object.is_null()) scenario["objects"] = Json{{"object", object}};
  return emit(svfa::run_scenario(scenario, g.run_options()), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for set-valued functions of a real variable"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "seed for theorem suites");
  app.add_option("--trials", g.trials, "trial count for theorem suites");
  app.add_flag("--parallel", g.parallel, "run independent tasks and suite trials in parallel");
  app.add_flag("--no-timing", g.no_timing, "omit wall-clock fields so reports are byte-stable");

  std::function<int()> action;

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->callback([&] { action = [&] { return emit(svfa::run_scenario_file(scenario_path, g.run_options()), g); }; });

  std::string target, side = "both", op = "shift", method = "analytic";
  double t0 = 0.0, h = 1e-4, tol = -1.0;
  std::vector<double> ts;

  ObjectArgs limit_inf_obj;
  auto* limit_inf = app.add_subcommand("limit-inf", "limit, limsup and liminf as t -> +inf");
  limit_inf_obj.attach(limit_inf);
  limit_inf->add_option("--target", target, "check convergence to this set (JSON ids or {\"open_disk\": r})");
  limit_inf->callback([&] {
    action = [&] {
      Json args = Json::object();
      if (!target.empty()) args["target"] = json_arg(target, "--target");
      return run_single("limit-inf", limit_inf_obj.build(), args, g);
    };
  });

  ObjectArgs limit_at_obj;
  auto* limit_at = app.add_subcommand("limit-at", "limit as t -> t0 from one or both sides");
  limit_at_obj.attach(limit_at);
  limit_at->add_option("--t0", t0, "the point")->required();
  limit_at->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  limit_at->add_option("--target", target, "check convergence to this set");
  limit_at->callback([&] {
    action = [&] {
      Json args{{"t0", t0}, {"side", side}};
      if (!target.empty()) args["target"] = json_arg(target, "--target");
      return run_single("limit-at", limit_at_obj.build(), args, g);
    };
  });

  ObjectArgs continuity_obj;
  auto* continuity = app.add_subcommand("continuity", "continuity at t0");
  continuity_obj.attach(continuity);
  continuity->add_option("--t0", t0, "the point")->required();
  continuity->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  continuity->callback([&] {
    action = [&] { return run_single("continuity", continuity_obj.build(), Json{{"t0", t0}, {"side", side}}, g); };
  });

  ObjectArgs sup_inf_obj;
  auto* sup_inf = app.add_subcommand("limsup-liminf", "superior and inferior limits at +inf");
  sup_inf_obj.attach(sup_inf);
  sup_inf->callback([&] {
    action = [&] { return run_single("limsup-liminf", sup_inf_obj.build(), Json::object(), g); };
  });

  std::string sequence;
  auto* seq = app.add_subcommand("seq", "limits of an eventually periodic sequence of sets");
  seq->add_option("--sequence", sequence, "{\"universe\", \"prefix\", \"cycle\"} as JSON, or @file")->required();
  seq->add_option("--target", target, "check convergence to this set");
  seq->callback([&] {
    action = [&] {
      Json args = Json::object();
      if (!target.empty()) args["target"] = json_arg(target, "--target");
      return run_single("seq", json_arg(sequence, "--sequence"), args, g);
    };
  });

  std::string theorem;
  bool all = false;
  std::size_t universe_size = 6;
  auto* suite = app.add_subcommand("theorem-suite", "randomized theorem checks");
  suite->add_option("--theorem", theorem, "theorem tag");
  suite->add_flag("--all", all, "run every registered tag");
  suite->add_option("--universe-size", universe_size, "universe size");
  suite->callback([&] {
    action = [&] {
      if (all == !theorem.empty()) {
        throw svfa::Error(svfa::ErrorKind::ParseError, "give exactly one of --all and --theorem");
      }
      Json args{{"universe_size", universe_size}};
      if (all) args["all"] = true;
      else args["theorem"] = theorem;
      return run_single("theorem-suite", Json(nullptr), args, g);
    };
  });

  std::string family_spec;
  auto* element = app.add_subcommand("element-spec", "sample, differentiate or shift-check a parametrized family");
  element->add_option("--object", family_spec, "{\"catalog\", \"grid\"} as JSON, or @file")->required();
  element->add_option("--op", op, "sample, derivative, injectivity or shift")
      ->check(CLI::IsMember({"sample", "derivative", "injectivity", "shift"}));
  element->add_option("--t", ts, "probe times")->delimiter(',');
  element->add_option("--method", method, "analytic or central")->check(CLI::IsMember({"analytic", "central"}));
  element->add_option("--step", h, "central-difference step h");
  element->add_option("--tol", tol, "tolerance");
  element->callback([&] {
    action = [&] {
      Json args{{"op", op}, {"method", method}, {"h", h}};
      if (!ts.empty()) args["t"] = ts;
      if (tol >= 0) args["tol"] = tol;
      return run_single("element-spec", json_arg(family_spec, "--object"), args, g);
    };
  });

  ObjectArgs plot_obj;
  std::string output;
  auto* plot = app.add_subcommand("plot-data", "trajectory and symmetric-difference intervals per element");
  plot_obj.attach(plot);
  plot->add_option("--target", target, "target set")->required();
  plot->add_option("--output", output, "write the table here instead of standard output");
  plot->callback([&] {
    action = [&] {
      const auto f = svfa::svf_object(plot_obj.build());
      const auto table = svfa::plot_table(f, svfa::target_set(f.universe(), json_arg(target, "--target")));
      if (output.empty()) {
        std::cout << table;
      } else {
        std::ofstream out(output);
        if (!out) throw svfa::Error(svfa::ErrorKind::InvalidArgument, "cannot write " + output);
        out << table;
      }
      return kExitPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    return action();
  } catch (const svfa::Error& e) {
    std::cerr << "svfa: " << e.what() << "\n";
    switch (e.kind()) {
      case svfa::ErrorKind::ParseError:
      case svfa::ErrorKind::UnknownCommand:
      case svfa::ErrorKind::UnknownTheorem:
      case svfa::ErrorKind::UnsupportedKind:
        return kExitMalformed;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "svfa: " << e.what() << "\n";
    return kExitFail;
  }
}
