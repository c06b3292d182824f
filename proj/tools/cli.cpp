#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "bary/canonical.hpp"
#include "bary/derived.hpp"
#include "bary/error.hpp"
#include "bary/graphs.hpp"
#include "bary/io.hpp"
#include "bary/reconstruct.hpp"
#include "bary/verify.hpp"

namespace bary::cli {

namespace {

constexpr const char* kVersion = "bary 1.0.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SimplicialComplex read_complex(const std::string& path) {
  return io::complex_from_json(read_file(path));
}

LabeledGraph read_graph(const std::string& path) {
  return io::graph_from_json(read_file(path));
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : fallback_(fallback), path_(path) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text << '\n';
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot write " + path_);
    file << text << '\n';
  }

 private:
  std::ostream& fallback_;
  const std::string& path_;
};

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

VerificationReport merge(VerificationReport a, const VerificationReport& b) {
  a.universe_size = std::max(a.universe_size, b.universe_size);
  a.pair_checks += b.pair_checks;
  a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
  for (const std::string& note : b.notes) {
    if (std::find(a.notes.begin(), a.notes.end(), note) == a.notes.end()) a.notes.push_back(note);
  }
  return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial complexes, barycentric subdivisions and their reconstruction", "bary"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string input;
  std::string second;
  std::string output_path;
  std::function<int()> action;
  const Output output(out, output_path);

  auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
    sub->add_option("-o,--output", output_path, "Write the result to this file instead of stdout");
    return sub;
  };

  int rounds = 1;
  std::string labels_path;
  auto* subdivide = with_input(app.add_subcommand("subdivide", "Barycentric subdivision of a complex"),
                               "Complex JSON file");
  subdivide->add_option("-k", rounds, "Number of subdivisions")->check(CLI::PositiveNumber);
  subdivide->add_option("--labels", labels_path, "Also write the face labeling of the last round");
  subdivide->callback([&] {
    action = [&] {
      SimplicialComplex current = read_complex(input);
      FaceLabeling labeling;
      for (int i = 0; i < rounds; ++i) {
        Subdivision s = barycentric_subdivision(current);
        current = std::move(s.complex);
        labeling = std::move(s.labeling);
      }
      if (!labels_path.empty()) Output(out, labels_path).write(io::labeling_to_json(labeling));
      output.write(io::complex_to_json(current));
      return 0;
    };
  });

  auto complex_command = [&](const char* name, const char* description,
                             std::function<std::string(const SimplicialComplex&)> body) {
    auto* sub = with_input(app.add_subcommand(name, description), "Complex JSON file");
    sub->callback([&, body] {
      action = [&, body] {
        output.write(body(read_complex(input)));
        return 0;
      };
    });
    return sub;
  };

  complex_command("dual", "Alexander dual", [](const SimplicialComplex& c) {
    return io::complex_to_json(alexander_dual(c));
  });
  complex_command("complement", "Complement complex (complements of facets)",
                  [](const SimplicialComplex& c) { return io::complex_to_json(complement_complex(c)); });
  complex_command("comp-graph", "Comparability graph (1-skeleton of the subdivision)",
                  [](const SimplicialComplex& c) { return io::graph_to_json(comparability_graph(c)); });
  complex_command("nonfaces", "Minimal nonfaces", [](const SimplicialComplex& c) {
    return io::generators_to_json(minimal_nonfaces(c));
  });
  complex_command("sr-gens", "Stanley-Reisner ideal generator supports", [](const SimplicialComplex& c) {
    return io::generators_to_json(stanley_reisner_generators(c));
  });
  complex_command("facet-gens", "Facet ideal generator supports", [](const SimplicialComplex& c) {
    return io::generators_to_json(facet_ideal_generators(c));
  });
  complex_command("euler", "Euler characteristic", [](const SimplicialComplex& c) {
    return "{\"euler_characteristic\":" + std::to_string(euler_characteristic(c)) + "}";
  });

  int skeleton_index = 0;
  auto* skel = with_input(app.add_subcommand("skeleton", "i-th skeleton"), "Complex JSON file");
  skel->add_option("-i", skeleton_index, "Skeleton dimension")->required();
  skel->callback([&] {
    action = [&] {
      output.write(io::complex_to_json(skeleton(read_complex(input), skeleton_index)));
      return 0;
    };
  });

  auto* iso = with_input(app.add_subcommand("iso", "Decide isomorphism and print a witness"),
                         "First complex JSON file");
  iso->add_option("second", second, "Second complex JSON file")->required();
  iso->callback([&] {
    action = [&] {
      const auto witness = are_isomorphic(read_complex(input), read_complex(second));
      output.write(io::bijection_to_json(witness ? &*witness : nullptr));
      return witness ? 0 : 1;
    };
  });

  bool full_report = false;
  auto report_result = [&](const ReconstructionReport& report) {
    if (report.status == ReconstructionStatus::ok && !full_report) {
      output.write(io::complex_to_json(*report.complex));
    } else {
      output.write(io::report_to_json(report));
    }
    return report.status == ReconstructionStatus::ok ? 0 : 1;
  };

  auto* rec = with_input(app.add_subcommand("reconstruct", "Rebuild a complex from its comparability graph"),
                         "Graph JSON file");
  rec->add_flag("--report", full_report, "Print the full reconstruction report");
  rec->callback([&] {
    action = [&] { return report_result(reconstruct_from_comparability_graph(read_graph(input))); };
  });

  auto* rec_sub = with_input(app.add_subcommand("reconstruct-sub", "Rebuild a complex from its barycentric subdivision"),
                             "Complex JSON file");
  rec_sub->add_flag("--report", full_report, "Print the full reconstruction report");
  rec_sub->callback([&] {
    action = [&] { return report_result(reconstruct_from_subdivision(read_complex(input))); };
  });

  auto* check = with_input(app.add_subcommand("check-comparability",
                                              "Is the graph the comparability graph of a complex?"),
                           "Graph JSON file");
  check->callback([&] {
    action = [&] {
      const ReconstructionReport report = reconstruct_from_comparability_graph(read_graph(input));
      output.write(io::report_to_json(report));
      return report.status == ReconstructionStatus::ok ? 0 : 1;
    };
  });

  int max_vertices = 0;
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Exhaustive check of the rigidity and equivalence statements");
  verify->add_option("--max-vertices", max_vertices, "Largest vertex count in the universe")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--theorem", theorem, "2.2 (rigidity) or 2.3 (equivalences); both when omitted")
      ->check(CLI::IsMember({"2.2", "2.3", "rigidity", "equivalences"}));
  verify->add_option("-o,--output", output_path, "Write the report to this file instead of stdout");
  verify->callback([&] {
    action = [&] {
      std::optional<VerificationReport> report;
      if (theorem.empty() || theorem == "2.2" || theorem == "rigidity") {
        report = verify_subdivision_rigidity(max_vertices, Universe::up_to);
      }
      if (theorem.empty() || theorem == "2.3" || theorem == "equivalences") {
        VerificationReport eq = verify_equivalences(max_vertices, Universe::up_to);
        report = report ? merge(std::move(*report), eq) : std::move(eq);
      }
      output.write(io::verification_to_json(*report));
      return report->passed() ? 0 : 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: MalformedInput: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
  } catch (const std::exception& e) {
    err << "error: Internal: " << one_line(e.what()) << '\n';
  }
  return 2;
}

}  // namespace bary::cli
