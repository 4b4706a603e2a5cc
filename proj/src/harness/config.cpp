#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <variant>

#include "tinysample/harness.hpp"

namespace tinysample {

namespace {

const char* const kKnownSamplers[] = {"mrw", "brwfb", "snowball", "forestfire", "tse"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, const std::string& context) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(context + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

// ---------------------------------------------------------------------------
// Flat TOML subset

using Scalar = std::variant<std::string, double, bool>;
using Value = std::variant<Scalar, std::vector<Scalar>>;

class ValueParser {
 public:
  ValueParser(std::string_view text, std::string context)
      : text_(text), context_(std::move(context)) {}

  Value parse() {
    skip_blank();
    Value v;
    if (peek() == '[') {
      v = parse_array();
    } else {
      v = parse_scalar();
    }
    skip_blank();
    if (pos_ != text_.size()) fail("trailing characters after value");
    return v;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(context_ + ": " + what);
  }

  // Whitespace, newlines and comments.
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::vector<Scalar> parse_array() {
    ++pos_;  // '['
    std::vector<Scalar> items;
    for (;;) {
      skip_blank();
      if (peek() == ']') {
        ++pos_;
        return items;
      }
      items.push_back(parse_scalar());
      skip_blank();
      if (peek() == ',') {
        ++pos_;
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
  }

  Scalar parse_scalar() {
    if (peek() == '"') return parse_string();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
           text_[pos_] != '#' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view word = text_.substr(begin, pos_ - begin);
    if (word == "true") return true;
    if (word == "false") return false;
    if (word.empty()) fail("missing value");
    std::string cleaned;
    for (char c : word) {
      if (c != '_') cleaned.push_back(c);
    }
    return parse_number(cleaned, context_);
  }

  std::string parse_string() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_++];
      if (c == '\n') fail("newline inside string");
      if (c == '\\') {
        if (pos_ >= text_.size()) break;
        char e = text_[pos_++];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      } else {
        out.push_back(c);
      }
    }
    if (peek() != '"') fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string context_;
};

// Bracket depth of `line` outside strings and comments.
int bracket_balance(std::string_view line) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      break;
    } else if (c == '[') {
      ++depth;
    } else if (c == ']') {
      --depth;
    }
  }
  return depth;
}

const Scalar& as_scalar(const Value& v, const std::string& key) {
  if (auto* s = std::get_if<Scalar>(&v)) return *s;
  throw ConfigError(key + ": expected a single value, got an array");
}

const std::vector<Scalar>& as_array(const Value& v, const std::string& key) {
  if (auto* a = std::get_if<std::vector<Scalar>>(&v)) return *a;
  throw ConfigError(key + ": expected an array");
}

double to_number(const Scalar& s, const std::string& key) {
  if (auto* d = std::get_if<double>(&s)) return *d;
  throw ConfigError(key + ": expected a number");
}

std::string to_string(const Scalar& s, const std::string& key) {
  if (auto* str = std::get_if<std::string>(&s)) return *str;
  throw ConfigError(key + ": expected a string");
}

std::uint64_t to_integer(const Scalar& s, const std::string& key) {
  double d = to_number(s, key);
  if (d < 0 || d != std::floor(d) || d > 9007199254740992.0) {
    throw ConfigError(key + ": expected a non-negative integer");
  }
  return static_cast<std::uint64_t>(d);
}

std::vector<double> to_numbers(const Value& v, const std::string& key) {
  std::vector<double> out;
  for (const Scalar& s : as_array(v, key)) out.push_back(to_number(s, key));
  return out;
}

}  // namespace

SamplerSpec parse_sampler_spec(std::string_view text) {
  SamplerSpec spec;
  text = trim(text);
  spec.label = std::string(text);
  std::size_t colon = text.find(':');
  spec.name = std::string(trim(text.substr(0, colon)));
  bool known = false;
  for (const char* k : kKnownSamplers) known |= spec.name == k;
  if (!known) throw ConfigError("unknown sampler '" + spec.name + "'");
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("sampler parameter '" + std::string(item) + "' lacks '='");
    }
    std::string key(trim(item.substr(0, eq)));
    spec.params[key] = parse_number(item.substr(eq + 1), "sampler " + spec.name);
  }

  for (const auto& [key, value] : spec.params) {
    const bool ok = (spec.name == "brwfb" && key == "alpha") ||
                    (spec.name == "forestfire" && key == "pf") ||
                    (spec.name == "tse" && key == "epsilon");
    if (!ok) throw ConfigError("sampler " + spec.name + " has no parameter '" + key + "'");
  }
  if (spec.name == "forestfire") {
    double pf = spec.param("pf", 0.7);
    if (!(pf > 0.0 && pf < 1.0)) throw ConfigError("forestfire: pf must lie in (0, 1)");
  }
  return spec;
}

std::vector<double> default_checkpoints(double max_fraction) {
  std::vector<double> out;
  for (int k = 1; k <= 4; ++k) {
    double f = k * 0.005;
    if (f <= max_fraction + 1e-12) out.push_back(f);
  }
  for (int pct = 3; pct <= 100; ++pct) {
    double f = pct / 100.0;
    if (f > max_fraction + 1e-12) break;
    out.push_back(f);
  }
  if (out.empty()) out.push_back(max_fraction);
  return out;
}

std::vector<double> default_alpha_sweep() {
  std::vector<double> out;
  for (int k = -8; k <= 4; ++k) out.push_back(k * 0.25);
  return out;
}

std::vector<SamplerSpec> default_samplers() {
  return {parse_sampler_spec("tse"), parse_sampler_spec("snowball"),
          parse_sampler_spec("forestfire:pf=0.7"), parse_sampler_spec("mrw")};
}

void ExperimentConfig::validate() const {
  if (graph_path.empty()) throw ConfigError("graph_path is required");
  if (samplers.empty()) throw ConfigError("samplers must not be empty");
  if (seeds.empty()) throw ConfigError("seeds must not be empty");
  if (!(max_fraction > 0.0 && max_fraction <= 1.0)) {
    throw ConfigError("max_fraction must lie in (0, 1]");
  }
  if (checkpoints.empty()) throw ConfigError("checkpoints must not be empty");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!(checkpoints[i] > 0.0 && checkpoints[i] <= 1.0)) {
      throw ConfigError("checkpoints must lie in (0, 1]");
    }
    if (i > 0 && !(checkpoints[i] > checkpoints[i - 1])) {
      throw ConfigError("checkpoints must be strictly increasing");
    }
  }
  if (checkpoints.back() > max_fraction + 1e-12) {
    throw ConfigError("checkpoints exceed max_fraction");
  }
  if (parallelism == 0) throw ConfigError("parallelism must be positive");
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  std::map<std::string, Value> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (view.front() == '[') {
      throw ConfigError("line " + std::to_string(line_no) + ": tables are not supported");
    }
    std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(view.substr(0, eq)));
    std::string value(view.substr(eq + 1));
    std::size_t start_line = line_no;
    int depth = bracket_balance(value);
    while (depth > 0 && std::getline(in, line)) {
      ++line_no;
      value += '\n';
      value += line;
      depth = bracket_balance(value);
    }
    if (depth != 0) {
      throw ConfigError("line " + std::to_string(start_line) + ": unbalanced brackets");
    }
    std::string context = "line " + std::to_string(start_line) + " (" + key + ")";
    if (entries.count(key)) throw ConfigError(context + ": duplicate key");
    entries.emplace(key, ValueParser(value, context).parse());
  }

  ExperimentConfig cfg;
  bool have_checkpoints = false;
  for (const auto& [key, value] : entries) {
    if (key == "graph_path") {
      std::filesystem::path p = to_string(as_scalar(value, key), key);
      cfg.graph_path = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else if (key == "samplers") {
      for (const Scalar& s : as_array(value, key)) {
        cfg.samplers.push_back(parse_sampler_spec(to_string(s, key)));
      }
    } else if (key == "seeds") {
      for (const Scalar& s : as_array(value, key)) cfg.seeds.push_back(to_integer(s, key));
    } else if (key == "max_fraction") {
      cfg.max_fraction = to_number(as_scalar(value, key), key);
    } else if (key == "checkpoints") {
      cfg.checkpoints = to_numbers(value, key);
      have_checkpoints = true;
    } else if (key == "alpha_sweep") {
      cfg.alpha_sweep = to_numbers(value, key);
    } else if (key == "parallelism") {
      cfg.parallelism = static_cast<unsigned>(to_integer(as_scalar(value, key), key));
    } else if (key == "timing") {
      const Scalar& s = as_scalar(value, key);
      if (auto* b = std::get_if<bool>(&s)) {
        cfg.timing = *b;
      } else {
        throw ConfigError("timing: expected true or false");
      }
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (!entries.count("samplers")) cfg.samplers = default_samplers();
  if (!entries.count("seeds")) {
    for (std::uint64_t s = 1; s <= 10; ++s) cfg.seeds.push_back(s);
  }
  if (!have_checkpoints) cfg.checkpoints = default_checkpoints(cfg.max_fraction);
  if (!entries.count("alpha_sweep")) cfg.alpha_sweep = default_alpha_sweep();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

}  // namespace tinysample
