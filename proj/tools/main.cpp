#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mvarg/errors.hpp"
#include "mvarg/session.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mvarg::PhiFunction parse_phi_flag(const std::string& text) {
  if (text == "sigmoid") return mvarg::SigmoidNearest{};
  if (text.rfind("step:", 0) == 0) {
    const std::string t = text.substr(5);
    double threshold = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), threshold);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw std::runtime_error("--phi step:<threshold> needs a number, got '" + t + "'");
    return mvarg::StepThreshold{threshold};
  }
  throw std::runtime_error("--phi must be 'sigmoid' or 'step:<threshold>'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoner for weighted argumentation graphs over a finite truth scale"};

  std::string graph_path, queries_path;
  int n = 0;
  std::string phi_flag = "sigmoid";
  std::string semantics_flag = "phi";
  std::string logic_flag = "goedel";
  std::string dist_flag = "uniform";
  std::string format_flag = "text";
  long long cap = 10'000'000;

  app.add_option("--graph", graph_path, "Graph description file")->required();
  app.add_option("--queries", queries_path, "Query statements file")->required();
  app.add_option("--n", n, "Truth scale resolution (degrees are k/n)")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_option("--phi", phi_flag, "Default acceptability function: sigmoid | step:<t>");
  app.add_option("--semantics", semantics_flag, "Labelling class: phi | coherent | faithful")
      ->check(CLI::IsMember({"phi", "coherent", "faithful"}));
  app.add_option("--logic", logic_flag, "Connective family: goedel | lukasiewicz")
      ->check(CLI::IsMember({"goedel", "lukasiewicz"}));
  app.add_option("--dist", dist_flag, "Probability distribution: uniform | <file>");
  app.add_option("--format", format_flag, "Report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cap, "Abort when (n+1)^|arguments| exceeds this")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    mvarg::GraphFile gf = mvarg::parse_graph(read_file(graph_path), n);

    mvarg::SemanticsChoice semantics = mvarg::SemanticsChoice::coherent();
    if (semantics_flag == "faithful") {
      semantics = mvarg::SemanticsChoice::faithful();
    } else if (semantics_flag == "phi") {
      mvarg::PhiSpec spec(parse_phi_flag(phi_flag));
      for (const auto& [arg, fn] : gf.phi_overrides) spec.set_override(arg, fn);
      semantics = mvarg::SemanticsChoice::phi_coherent(std::move(spec));
    }

    const mvarg::LogicSystem* logic = mvarg::LogicSystem::by_name(logic_flag);
    if (!logic) throw std::runtime_error("unknown logic '" + logic_flag + "'");

    mvarg::Session session(gf.graph, n, std::move(semantics));
    session.logic = logic;
    session.cap = cap;
    if (dist_flag != "uniform") session.distribution_text = read_file(dist_flag);
    session.statements = mvarg::parse_queries(read_file(queries_path), session.graph, n);

    mvarg::Report report = mvarg::run_session(session);
    std::cout << (format_flag == "json" ? report.to_json() : report.to_text());
    return 0;
  } catch (const mvarg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
