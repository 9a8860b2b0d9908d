// cake: command-line front end for the division protocols and verifiers.
//
// Exit codes: 0 ok, 1 a checked property failed, 2 bad input or usage,
// 3 unsupported player count, 4 resource cap hit, 5 internal error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cake/cake.hpp"

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, capability = 3, resource = 4, internal = 5 };

void emit(const cake::Json& j, const std::string& output) {
  std::string text = j.dump(2) + "\n";
  if (output.empty()) std::cout << text;
  else cake::write_text_file(output, text);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int divide(const std::string& algorithm, const std::string& input, const std::string& output) {
  cake::Instance inst = cake::load_instance(input);
  auto vs = inst.valuations();
  cake::Division d = cake::protocol_by_name(algorithm, vs.size())(vs);
  emit(cake::to_json(d, inst.names()), output);
  if (!output.empty())
    for (std::size_t i = 0; i < d.size(); ++i)
      std::cout << inst.players[i].name << ": " << d.pieces[i] << " value " << cake::format_rational(d.values[i])
                << "\n";
  return ok;
}

int verify(const std::string& input, const std::string& division, const std::string& properties,
           const std::string& output) {
  cake::Instance inst = cake::load_instance(input);
  auto vs = inst.valuations();
  cake::LoadedDivision loaded = cake::division_from_json(cake::read_json_file(division), inst);
  auto props = split_list(properties);
  if (props.empty()) throw cake::DomainError("no properties requested");
  cake::Procedure protocol;
  for (const auto& p : props)
    if (p == "symmetric") protocol = cake::protocol_by_name(loaded.division.algorithm, vs.size());
  cake::FairnessReport report = cake::verify(loaded.division, vs, props, protocol, loaded.counts);
  emit(cake::to_json(report, inst.names()), output);
  for (const auto& v : report.verdicts) std::cerr << v.property << ": " << (v.pass ? "pass" : "fail") << "\n";
  return report.pass() ? ok : failed;
}

int sweep(const std::string& algorithm, const std::string& input, const std::string& output) {
  cake::Instance inst = cake::load_instance(input);
  auto vs = inst.valuations();
  auto names = inst.names();
  cake::SymmetrySweep s = cake::check_symmetric(cake::protocol_by_name(algorithm, vs.size()), vs);
  if (!output.empty()) emit(cake::to_json(s, algorithm, names), output);
  for (const auto& run : s.runs) {
    std::string order, values;
    for (std::size_t k : run.order) order += (order.empty() ? "" : " ") + names[k];
    for (std::size_t i = 0; i < run.values.size(); ++i)
      values += (i ? "  " : "") + names[i] + "=" + cake::format_rational(run.values[i]);
    std::cout << "[" << order << "]  " << values << "\n";
  }
  std::cout << "symmetric: " << (s.verdict.pass ? "true" : "false") << "\n";
  return s.verdict.pass ? ok : failed;
}

int demo(const std::string& name, std::optional<std::size_t> n) {
  cake::DemoResult r = cake::run_demo(name, n);
  std::cout << r.name << "\n";
  for (const auto& line : r.lines) std::cout << line << "\n";
  std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? ok : failed;
}

int gen(const cake::GeneratorOptions& opt, const std::string& output) {
  emit(cake::to_json(cake::generate_instance(opt)), output);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cake division: protocols, verifiers, sweeps and generators"};
  app.require_subcommand(1);

  std::string algorithm, input, output, division, properties, demo_name;
  std::optional<std::size_t> demo_n;
  cake::GeneratorOptions gopt;

  std::vector<std::string> algorithms;
  for (const auto& p : cake::protocols()) algorithms.push_back(p.name);

  auto* d = app.add_subcommand("divide", "Run a protocol and write the division as JSON");
  d->add_option("-a,--algorithm", algorithm, "Protocol name")->required()->check(CLI::IsMember(algorithms));
  d->add_option("-i,--input", input, "Instance file")->required();
  d->add_option("-o,--output", output, "Division file (stdout if omitted)");

  auto* v = app.add_subcommand("verify", "Check fairness properties of a division");
  v->add_option("-i,--input", input, "Instance file")->required();
  v->add_option("-d,--division", division, "Division file")->required();
  v->add_option("-p,--properties", properties,
                "Comma-separated: proportional, envy-free, equitable, aristotelian, symmetric, query-bound")
      ->required();
  v->add_option("-o,--output", output, "Report file (stdout if omitted)");

  auto* s = app.add_subcommand("sweep", "Run a protocol on every input order and compare values");
  s->add_option("-a,--algorithm", algorithm, "Protocol name")->required()->check(CLI::IsMember(algorithms));
  s->add_option("-i,--input", input, "Instance file")->required();
  s->add_option("-o,--output", output, "Sweep report file");

  auto* m = app.add_subcommand("demo", "Narrated run of a worked example");
  m->add_option("name", demo_name, "Demo name")->required()->check(CLI::IsMember(cake::demo_names()));
  m->add_option("-n,--players", demo_n, "Size parameter for the S-count demos");

  auto* g = app.add_subcommand("gen", "Generate a seeded random instance");
  g->add_option("-n,--players", gopt.players, "Number of players")->required()->check(CLI::Range(1, 64));
  g->add_option("-k,--pieces", gopt.segments, "Density pieces per valuation")->check(CLI::Range(1, 64));
  g->add_option("-s,--seed", gopt.seed, "Random seed");
  g->add_option("--duplicates", gopt.duplicates, "Plant this many identical valuations");
  g->add_option("--max-denominator", gopt.max_denominator, "Largest breakpoint denominator")
      ->check(CLI::Range(2L, 1000000L));
  g->add_option("-o,--output", output, "Instance file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*d) return divide(algorithm, input, output);
    if (*v) return verify(input, division, properties, output);
    if (*s) return sweep(algorithm, input, output);
    if (*m) return demo(demo_name, demo_n);
    if (*g) return gen(gopt, output);
  } catch (const cake::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const cake::CapabilityError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return capability;
  } catch (const cake::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const cake::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const cake::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
