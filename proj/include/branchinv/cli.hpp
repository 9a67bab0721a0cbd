#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "branchinv/errors.hpp"
#include "branchinv/fixtures.hpp"

namespace branchinv::cli {

using json = nlohmann::json;

/// Process exit status for each failure kind; 0 is success and 2 covers
/// malformed input and usage errors.
int exit_code(ErrorKind kind) noexcept;

/// Reads a branch file:
///   {"kind": "parametrization", "n": 4, "terms": [[7, "1"], [13, "17/14"]],
///    "trunc": 80}
///   {"kind": "polynomial", "terms": [[[0, 2], "1"], [[3, 0], "-1"]]}
/// "trunc" marks a series known only below t^trunc; "label" is optional.
fixtures::Branch parse_branch(const json& doc);

json branch_json(const Parametrization& phi);
json branch_json(const BivarPoly& f);

struct Options {
  std::optional<int> precision;
  bool swap_xy = false;
  std::optional<int> known_lambda;
};

/// A resolved command argument: a file path, "fixture:<name>", a --fixture
/// value or inline JSON.
struct Input {
  std::string source;
  fixtures::Branch branch;
};

Input load_input(const std::string& arg);
Input load_fixture(const std::string& name);

/// Output document {command, inputs, results, checks, precision_used}.
/// Commands throw BranchError on failure.
json cmd_invariants(const Input& in, const Options& opt);
json cmd_zariski(const Input& in, const Options& opt);
json cmd_pair(const std::string& sub, const Input& a, const Input& b, const Options& opt);
json cmd_expand(const Input& f, const Input& h, const Options& opt);
json cmd_convert(const std::string& sub, const Input& in, const Options& opt);

/// Human-readable rendering of a command document.
std::string render_text(const json& doc);

/// Full command line front end; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchinv::cli
