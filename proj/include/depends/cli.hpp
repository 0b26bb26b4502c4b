#pragma once

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "depends/emitter.hpp"
#include "depends/pipeline.hpp"

namespace depends {

struct CliRequest {
  std::string lang;
  std::string src;
  std::string output;
  std::vector<std::string> includes;
  bool auto_include = false;
  std::string output_dir = ".";
  std::string format = "json";
  std::string granularity = "file";
  bool strip_leading_path = false;
  bool show_language = false;
  bool emit_name_map = false;
  std::string name_pattern = "dot";
};

/// Either a request to run, or an exit code with the text to print
/// (help on stdout, errors and usage on stderr).
struct ParseOutcome {
  std::optional<CliRequest> request;
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline void configure(CLI::App& app, CliRequest& req) {
  app.add_option("lang", req.lang, "The language of project files: [kotlin, java]")->required();
  app.add_option("src", req.src, "The directory to be analyzed")->required();
  app.add_option("output", req.output, "The output file name")->required();
  app.add_flag("--auto-include", req.auto_include, "Auto include all paths under the source path");
  app.add_option("-i,--include", req.includes, "The files of searching path");
  app.add_option("-d,--dir", req.output_dir, "The output directory")->capture_default_str();
  app.add_option("-f,--format", req.format, "The output format: [json, dot]")->capture_default_str();
  app.add_option("-g,--granularity", req.granularity, "Granularity of dependency: [file, structure]")
      ->capture_default_str();
  app.add_flag("-s,--strip-leading-path", req.strip_leading_path, "Strip the leading path");
  app.add_flag("--show-language", req.show_language, "Show language info in dependency type");
  app.add_flag("-m,--n-map-files", req.emit_name_map, "Output the id to name map file");
  app.add_option("-p,--namepattern", req.name_pattern, "The name path separators: [dot, unix]")
      ->capture_default_str();
}

}  // namespace detail

inline std::string usage_text() {
  CLI::App app{"Extracts dependencies from Kotlin and Java sources", "depends"};
  CliRequest ignored;
  detail::configure(app, ignored);
  return app.help();
}

/// `args` excludes the program name.
inline ParseOutcome parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Extracts dependencies from Kotlin and Java sources", "depends"};
  CliRequest req;
  detail::configure(app, req);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  ParseOutcome outcome;
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.exit_code = 0;
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    outcome.err = std::string(e.what()) + "\n" + app.help();
    return outcome;
  }
  outcome.request = std::move(req);
  return outcome;
}

inline ParseOutcome parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

inline std::string format_timings(const StageTimings& t) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "Source File Parsing: " << t.parsing_ms << " ms\n";
  os << "Entity Extraction: " << t.entity_ms << " ms\n";
  os << "Dependency Relation Extraction: " << t.relation_ms << " ms\n";
  os << "Result Output: " << t.output_ms << " ms\n";
  os << "Total: " << t.total_ms << " ms\n";
  return os.str();
}

struct RunResult {
  int exit_code = 0;
  StageTimings timings;
  std::size_t files_parsed = 0;
  std::vector<std::string> written;
};

inline EmitOptions emit_options(const CliRequest& req) {
  EmitOptions o;
  o.format = req.format;
  o.granularity = req.granularity;
  o.show_language = req.show_language;
  o.strip_leading_path = req.strip_leading_path;
  o.leading_path = req.src;
  o.emit_name_map = req.emit_name_map;
  o.output_dir = req.output_dir;
  o.output_name = req.output;
  o.name_pattern = req.name_pattern;
  return o;
}

inline RunResult run_pipeline(const CliRequest& req, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  RunResult result;
  try {
    EmitOptions options = emit_options(req);
    options.validate();
    LanguageRegistry registry = make_default_registry();
    auto processors = processors_for_request(registry, req.lang);

    auto paths = discover_sources(processors, req.src, req.includes, req.auto_include);
    if (paths.empty()) {
      err << "error: no source files found under " << req.src << "\n";
      result.exit_code = 1;
      return result;
    }

    Extraction ex = extract(registry, paths, InferenceConfig{}, &result.timings);
    for (const auto& d : ex.diagnostics) err << "warning: " << d << "\n";
    result.files_parsed = ex.files.size();
    if (ex.files.empty()) {
      err << "error: none of the " << paths.size() << " source files could be parsed\n";
      result.exit_code = 1;
      return result;
    }

    auto stage = std::chrono::steady_clock::now();
    result.written = emit_outputs(ex.tree, ex.relations, options);
    result.timings.output_ms = detail::elapsed_ms(stage);
    result.timings.total_ms = detail::elapsed_ms(start);

    out << "Analyzed " << ex.files.size() << " of " << paths.size() << " files; " << ex.tree.size() << " entities, "
        << ex.relations.size() << " relations\n";
    for (const auto& w : result.written) out << "Wrote " << w << "\n";
    out << format_timings(result.timings);
  } catch (const DependsError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }
  return result;
}

/// Whole command: parse, run, print. Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_args(args);
  out << parsed.out;
  err << parsed.err;
  if (!parsed.request) return parsed.exit_code;
  return run_pipeline(*parsed.request, out, err).exit_code;
}

}  // namespace depends
