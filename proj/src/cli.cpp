#include "hypiso/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hypiso/error.hpp"
#include "hypiso/report.hpp"

namespace hypiso::cli {

namespace {

struct Failure {
  std::string code;
  std::string message;
  std::optional<SourceLocation> where;
  int argument = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::string quote_text(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

ParsedMatrix parse_matrix_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t index = 0;
  auto next_content = [&]() -> std::optional<std::size_t> {
    while (index < lines.size() && is_comment_or_blank(lines[index])) ++index;
    if (index == lines.size()) return std::nullopt;
    return index++;
  };

  const auto header = next_content();
  if (!header) throw ParseError("empty input: expected the matrix size n+1", lines.size(), 1);
  const auto head = tokenize(lines[*header]);
  const std::size_t header_line = *header + 1;
  if (head.size() != 1) throw ParseError("first line must hold exactly one integer n+1", header_line, head.size() > 1 ? head[1].column : 1);
  std::size_t size = 0;
  {
    const std::string token(head[0].text);
    std::size_t used = 0;
    long value = -1;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0) throw ParseError("matrix size " + quote_text(token) + " is not a natural number", header_line, head[0].column);
    if (value < 3) throw ParseError("matrix size must be at least 3 (n >= 2)", header_line, head[0].column);
    if (value > 256) throw ParseError("matrix size is unreasonably large", header_line, head[0].column);
    size = static_cast<std::size_t>(value);
  }

  ParsedMatrix out{QMatrix(size, size), {}};
  out.where.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    const auto row_index = next_content();
    if (!row_index)
      throw ParseError("expected " + std::to_string(size) + " rows, found " + std::to_string(r), lines.size(), 1);
    const auto tokens = tokenize(lines[*row_index]);
    const std::size_t line_no = *row_index + 1;
    if (tokens.size() != size)
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(size),
                       line_no, tokens.size() > size ? tokens[size].column : lines[*row_index].size() + 1);
    for (std::size_t c = 0; c < size; ++c) {
      auto value = try_parse_rational(tokens[c].text);
      if (!value) throw ParseError("malformed entry " + quote_text(tokens[c].text), line_no, tokens[c].column);
      out.matrix(r, c) = *value;
      out.where.push_back({line_no, tokens[c].column});
    }
  }
  if (const auto extra = next_content()) throw ParseError("unexpected content after the last row", *extra + 1, 1);
  return out;
}

namespace {

SourceLocation location_of_byte(std::string_view text, std::size_t byte) {
  SourceLocation loc{1, 1};
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto loc = location_of_byte(text, e.byte);
    throw ParseError("invalid JSON", loc.line, loc.column);
  }
}

Rational json_scalar(const Json& j) {
  std::string text;
  if (j.is_string()) text = j.get<std::string>();
  else if (j.is_number()) text = j.dump();
  else throw ParseError("expected a rational number, got " + j.dump(), 0, 0);
  auto value = try_parse_rational(text);
  if (!value) throw ParseError("malformed rational " + quote_text(text), 0, 0);
  return *value;
}

GaussianRational json_complex(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex entries are [re, im] pairs, got " + j.dump(), 0, 0);
    return {json_scalar(j[0]), json_scalar(j[1])};
  }
  return {json_scalar(j), 0};
}

}  // namespace

Moebius2 parse_moebius_json(std::string_view text, Orientation orientation) {
  const Json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected a 2x2 matrix", 1, 1);
  std::vector<GaussianRational> e;
  if (j.size() == 4) {
    for (const auto& x : j) e.push_back(json_complex(x));
  } else if (j.size() == 2 && j[0].is_array() && j[1].is_array() && j[0].size() == 2 && j[1].size() == 2) {
    for (const auto& row : j)
      for (const auto& x : row) e.push_back(json_complex(x));
  } else {
    throw ParseError("expected [[a, b], [c, d]] or [a, b, c, d]", 1, 1);
  }
  return Moebius2(e[0], e[1], e[2], e[3], orientation);
}

ANElement parse_an_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("a") || !j.contains("r") || !j["a"].is_array())
    throw ParseError("expected {\"a\": [...], \"r\": ...}", 1, 1);
  std::vector<Rational> a;
  for (const auto& x : j["a"]) a.push_back(json_scalar(x));
  return ANElement(std::move(a), json_scalar(j["r"]));
}

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{"InvalidArgument", "cannot open " + path, std::nullopt};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

IsometryElement load_isometry(const std::string& path, std::istream& in, ParsedMatrix* echo = nullptr) {
  ParsedMatrix parsed = parse_matrix_text(read_input(path, in));
  const std::size_t size = parsed.matrix.rows();
  try {
    IsometryElement t = validate_isometry(parsed.matrix);
    if (echo) *echo = std::move(parsed);
    return t;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::WrongComponent) throw Failure{std::string(to_string(e.code())), e.what(), parsed.where[0]};
    if (e.code() != ErrorCode::NotOrthogonal) throw;
    const QMatrix j = LorentzForm(size - 1).gram();
    const QMatrix gram = parsed.matrix.transpose() * j * parsed.matrix;
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        if (gram(r, c) != j(r, c))
          throw Failure{"NotOrthogonal",
                        "columns " + std::to_string(r + 1) + " and " + std::to_string(c + 1) + " have <u, v> = " +
                            to_string(gram(r, c)) + ", expected " + to_string(j(r, c)),
                        parsed.where[r * size + c]};
    throw;
  }
}

Json envelope(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_classify(const std::string& path, std::istream& in, std::ostream& out) {
  ParsedMatrix parsed;
  const IsometryElement t = load_isometry(path, in, &parsed);
  Json j = envelope("classify");
  j["input"] = {{"n", t.n()}, {"matrix", to_json(t.matrix())}};
  const Json report = classification_report(t);
  for (const auto& [key, value] : report.items()) j[key] = value;
  emit(out, j);
}

Json invariants_json(const IsometryElement& t) {
  const auto [cp, mp] = conjugacy_invariant(t);
  return {{"char", to_json(cp)}, {"min", to_json(mp)}, {"zclass", to_json(zclass_signature(t))}};
}

void cmd_conjugate(const std::string& first, const std::string& second, std::istream& in, std::ostream& out) {
  auto load = [&](const std::string& path, int argument) {
    try {
      return load_isometry(path, in);
    } catch (Failure& f) {
      f.argument = argument;
      throw;
    } catch (const ParseError& e) {
      std::optional<SourceLocation> where;
      if (e.line() > 0) where = SourceLocation{e.line(), e.column()};
      throw Failure{"ParseError", e.what(), where, argument};
    } catch (const Error& e) {
      throw Failure{std::string(to_string(e.code())), e.what(), std::nullopt, argument};
    }
  };
  const IsometryElement a = load(first, 1);
  const IsometryElement b = load(second, 2);
  Json j = envelope("conjugate");
  j["conjugate"] = are_conjugate(a, b);
  j["same_zclass"] = same_zclass(a, b);
  j["first"] = invariants_json(a);
  j["second"] = invariants_json(b);
  emit(out, j);
}

void cmd_census(std::size_t from, std::size_t to, const std::string& format, bool verify, bool atlas, std::ostream& out) {
  if (from < 2 || to < from || to > 60)
    throw Failure{"RangeError", "census range must satisfy 2 <= from <= to <= 60", std::nullopt};
  std::vector<CensusRow> rows;
  for (std::size_t n = from; n <= to; ++n) {
    const CensusRow row = count_zclasses(n);
    if (verify) {
      CensusRow seen;
      seen.n = n;
      for (const auto& sig : enumerate_zclasses(n)) {
        if (sig.kind == Kind::Elliptic) ++seen.elliptic;
        else if (sig.kind == Kind::Hyperbolic) ++seen.hyperbolic;
        else ++seen.parabolic;
      }
      seen.total = seen.elliptic + seen.hyperbolic + seen.parabolic;
      if (!(seen == row))
        throw Failure{"VerificationFailed", "formula and enumeration disagree at n = " + std::to_string(n), std::nullopt};
    }
    rows.push_back(row);
  }
  if (format == "csv") {
    out << "n,elliptic,hyperbolic,parabolic,total\n";
    for (const auto& r : rows) out << r.n << ',' << r.elliptic << ',' << r.hyperbolic << ',' << r.parabolic << ',' << r.total << '\n';
    return;
  }
  Json j = envelope("census");
  Json list = Json::array();
  for (const auto& r : rows) list.push_back(to_json(r));
  j["rows"] = std::move(list);
  if (verify) j["verified"] = true;
  if (atlas) {
    Json entries = Json::array();
    for (std::size_t n = from; n <= to; ++n) {
      Json sigs = Json::array();
      for (const auto& sig : enumerate_zclasses(n)) sigs.push_back(atlas_entry(sig, n));
      entries.push_back({{"n", n}, {"signatures", std::move(sigs)}});
    }
    j["atlas"] = std::move(entries);
  }
  emit(out, j);
}

void cmd_moebius(const std::string& path, Orientation orientation, bool h2, bool lift, std::istream& in, std::ostream& out) {
  const Moebius2 m = parse_moebius_json(read_input(path, in), orientation);
  Json j = envelope("moebius");
  j["input"] = {{"matrix", to_json(m)}};
  const Json report = moebius_report(m, h2, lift);
  for (const auto& [key, value] : report.items()) j[key] = value;
  emit(out, j);
}

void cmd_an(const std::string& path, std::istream& in, std::ostream& out) {
  const ANElement e = parse_an_json(read_input(path, in));
  Json j = envelope("an");
  j["input"] = to_json(e);
  const Json report = an_report(e);
  for (const auto& [key, value] : report.items()) j[key] = value;
  emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of isometries of hyperbolic space", "hypiso"};
  app.require_subcommand(1);

  std::string input;
  std::string second;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a rational matrix in O(1,n)");
  classify_cmd->add_option("input", input, "Matrix file, or - for stdin")->required();

  auto* conjugate_cmd = app.add_subcommand("conjugate", "Decide conjugacy and z-class equality of two matrices");
  conjugate_cmd->add_option("first", input, "First matrix file")->required();
  conjugate_cmd->add_option("second", second, "Second matrix file")->required();

  std::size_t from = 2;
  std::size_t to = 30;
  std::string format = "json";
  bool verify = false;
  bool atlas = false;
  auto* census_cmd = app.add_subcommand("census", "Count z-classes per dimension");
  census_cmd->add_option("--from", from, "Smallest n")->capture_default_str();
  census_cmd->add_option("--to", to, "Largest n")->capture_default_str();
  census_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  census_cmd->add_flag("--verify", verify, "Re-derive every count by enumeration");
  census_cmd->add_flag("--atlas", atlas, "Include every signature with its centralizer (json only)");

  bool reversing = false;
  std::string orientation = "preserving";
  std::string model = "h3";
  bool lift = false;
  auto* moebius_cmd = app.add_subcommand("moebius", "Classify a 2x2 complex matrix as an isometry of H^3 or H^2");
  moebius_cmd->add_option("input", input, "JSON matrix file, or - for stdin")->required();
  moebius_cmd->add_flag("--reversing", reversing, "Act on conj(z)");
  moebius_cmd->add_option("--orientation", orientation, "preserving or reversing")
      ->check(CLI::IsMember({"preserving", "reversing"}));
  moebius_cmd->add_option("--model", model, "h3 or h2")->check(CLI::IsMember({"h3", "h2"}))->capture_default_str();
  moebius_cmd->add_flag("--lift", lift, "Include the lift to the linear model and cross-check it");

  auto* an_cmd = app.add_subcommand("an", "Conjugacy and z-class of an element of the AN group");
  an_cmd->add_option("input", input, "JSON element file, or - for stdin")->required();

  std::vector<std::string> storage{"hypiso"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  std::string command = "hypiso";
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e, out, err);
      throw Failure{"UsageError", e.what(), std::nullopt};
    }
    try {
      if (classify_cmd->parsed()) {
        command = "classify";
        cmd_classify(input, in, out);
      } else if (conjugate_cmd->parsed()) {
        command = "conjugate";
        cmd_conjugate(input, second, in, out);
      } else if (census_cmd->parsed()) {
        command = "census";
        cmd_census(from, to, format, verify, atlas, out);
      } else if (moebius_cmd->parsed()) {
        command = "moebius";
        const bool rev = reversing || orientation == "reversing";
        cmd_moebius(input, rev ? Orientation::Reversing : Orientation::Preserving, model == "h2", lift, in, out);
      } else if (an_cmd->parsed()) {
        command = "an";
        cmd_an(input, in, out);
      }
    } catch (const ParseError& e) {
      std::optional<SourceLocation> where;
      if (e.line() > 0) where = SourceLocation{e.line(), e.column()};
      throw Failure{"ParseError", e.what(), where};
    } catch (const Error& e) {
      throw Failure{std::string(to_string(e.code())), e.what(), std::nullopt};
    }
  } catch (const Failure& f) {
    Json j = envelope(command);
    Json e = {{"code", f.code}, {"message", f.message}};
    if (f.where) {
      e["line"] = f.where->line;
      e["column"] = f.where->column;
    }
    if (f.argument > 0) e["argument"] = f.argument;
    j["error"] = std::move(e);
    emit(out, j);
    err << "hypiso: " << f.code << ": " << f.message << '\n';
    return 2;
  } catch (const std::exception& ex) {
    Json j = envelope(command);
    j["error"] = {{"code", "InternalError"}, {"message", ex.what()}};
    emit(out, j);
    err << "hypiso: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace hypiso::cli
