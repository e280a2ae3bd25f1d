#include "simcheck/vcd/vcd.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include "simcheck/error.hpp"

namespace simcheck::vcd {

namespace {

struct Tok {
  std::string_view text;
  std::size_t offset = 0;
};

std::vector<Tok> tokenize(std::string_view s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

[[noreturn]] void malformed(std::size_t offset, const std::string& msg) {
  throw Error(ErrorCode::MalformedVcd, "malformed VCD at byte " + std::to_string(offset) + ": " + msg);
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

char norm_digit(char c) {
  switch (c) {
    case '0': return '0';
    case '1': return '1';
    case 'x': case 'X': return 'x';
    case 'z': case 'Z': return 'z';
    default: return 0;
  }
}

// Left-extends a short vector value: 0/1 leading digits extend with 0, x and
// z extend with themselves.
Value extend(std::string_view digits, int width) {
  Value v;
  char lead = digits.empty() ? '0' : digits.front();
  char fill = (lead == 'x' || lead == 'z') ? lead : '0';
  if (static_cast<int>(digits.size()) < width) v.assign(static_cast<std::size_t>(width) - digits.size(), fill);
  v.append(digits);
  return v;
}

std::string id_code_for(std::size_t n) {
  std::string s;
  do {
    s += static_cast<char>('!' + n % 94);
    n /= 94;
  } while (n > 0);
  return s;
}

std::size_t count_components(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '.'));
}

// Candidates whose name is `name` or ends with ".name"; picks the one with
// the fewest leading components.
template <typename Range, typename NameOf>
std::optional<std::size_t> best_match(const Range& items, const std::string& name, NameOf name_of) {
  std::optional<std::size_t> best;
  std::size_t best_extra = 0;
  std::size_t i = 0;
  const std::string suffix = "." + name;
  for (const auto& item : items) {
    const std::string& n = name_of(item);
    bool match = n == name || (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0);
    if (match) {
      std::size_t extra = count_components(n) - count_components(name);
      if (n == name) extra = 0;
      if (!best || extra < best_extra) {
        best = i;
        best_extra = extra;
      }
    }
    ++i;
  }
  return best;
}

}  // namespace

const Var* Waveform::find_var(const std::string& hier_name) const {
  auto idx = best_match(vars, hier_name, [](const Var& v) -> const std::string& { return v.name; });
  return idx ? &vars[*idx] : nullptr;
}

const std::vector<Change>& Waveform::changes_of(const Var& v) const {
  static const std::vector<Change> kEmpty;
  auto it = changes.find(v.id_code);
  return it == changes.end() ? kEmpty : it->second;
}

Waveform parse_vcd_text(std::string_view text) {
  Waveform w;
  std::vector<Tok> toks = tokenize(text);
  std::vector<std::string> scopes;
  std::unordered_map<std::string, int> width_of_code;
  std::unordered_map<std::string, bool> skipped_codes;  // real vars
  bool definitions_done = false;
  bool have_time = false;
  std::uint64_t now = 0;

  auto skip_to_end = [&](std::size_t& i) {
    std::size_t start = toks[i].offset;
    while (i < toks.size() && toks[i].text != "$end") ++i;
    if (i >= toks.size()) malformed(start, "missing $end");
  };

  auto record = [&](const std::string& code, Value v, std::size_t offset) {
    if (!definitions_done) malformed(offset, "value change before $enddefinitions");
    auto& list = w.changes[code];
    if (!list.empty() && list.back().time == now) {
      list.back().value = std::move(v);
    } else {
      list.push_back({now, std::move(v)});
    }
  };

  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string_view t = toks[i].text;
    std::size_t off = toks[i].offset;
    if (t.front() == '$') {
      if (t == "$scope") {
        if (i + 3 >= toks.size() || toks[i + 3].text != "$end") malformed(off, "bad $scope");
        scopes.emplace_back(toks[i + 2].text);
        i += 3;
      } else if (t == "$upscope") {
        if (scopes.empty()) malformed(off, "$upscope without $scope");
        scopes.pop_back();
        ++i;
        skip_to_end(i);
      } else if (t == "$var") {
        std::size_t j = i + 1;
        std::vector<std::string_view> parts;
        while (j < toks.size() && toks[j].text != "$end") parts.push_back(toks[j++].text);
        if (j >= toks.size() || parts.size() < 4) malformed(off, "bad $var");
        std::uint64_t width = 0;
        if (!parse_u64(parts[1], width) || width == 0 || width > 4096) malformed(off, "bad $var width");
        std::string code(parts[2]);
        std::string ref(parts[3]);
        if (parts.size() > 4 && parts[4].front() == '[' && parts[4].find(':') == std::string_view::npos)
          ref += std::string(parts[4]);
        std::string name;
        for (const auto& s : scopes) name += s + ".";
        name += ref;
        i = j;
        if (parts[0] == "real" || parts[0] == "realtime") {
          w.warnings.push_back("skipping real variable '" + name + "'");
          skipped_codes[code] = true;
          continue;
        }
        auto known = width_of_code.find(code);
        if (known != width_of_code.end() && known->second != static_cast<int>(width))
          throw Error(ErrorCode::DuplicateIdCode, "id code '" + code + "' redeclared with a different width at byte " +
                                                      std::to_string(off));
        width_of_code[code] = static_cast<int>(width);
        w.vars.push_back(Var{name, code, static_cast<int>(width)});
      } else if (t == "$timescale") {
        std::size_t j = i + 1;
        std::string spec;
        while (j < toks.size() && toks[j].text != "$end") spec += std::string(toks[j++].text);
        if (j >= toks.size()) malformed(off, "missing $end");
        std::size_t k = 0;
        while (k < spec.size() && std::isdigit(static_cast<unsigned char>(spec[k]))) ++k;
        if (k == 0 || k == spec.size()) malformed(off, "bad $timescale");
        w.timescale.magnitude = std::stoi(spec.substr(0, k));
        w.timescale.unit = spec.substr(k);
        i = j;
      } else if (t == "$enddefinitions") {
        ++i;
        skip_to_end(i);
        definitions_done = true;
      } else if (t == "$date" || t == "$version" || t == "$comment") {
        skip_to_end(i);
      } else if (t == "$dumpvars" || t == "$dumpall" || t == "$dumpon" || t == "$dumpoff" || t == "$end") {
        // Block markers; the values inside are ordinary changes.
      } else {
        w.warnings.push_back("skipping unknown keyword " + std::string(t));
        skip_to_end(i);
      }
      continue;
    }
    if (t.front() == '#') {
      std::uint64_t time = 0;
      if (!parse_u64(t.substr(1), time)) malformed(off, "bad timestamp");
      if (have_time && time < now) malformed(off, "timestamp goes backwards");
      now = time;
      have_time = true;
      continue;
    }
    char first = t.front();
    if (first == 'b' || first == 'B' || first == 'r' || first == 'R') {
      if (i + 1 >= toks.size()) malformed(off, "vector change without id code");
      std::string code(toks[i + 1].text);
      ++i;
      if (skipped_codes.count(code)) continue;
      auto known = width_of_code.find(code);
      if (known == width_of_code.end()) malformed(off, "change on undeclared id code '" + code + "'");
      if (first == 'r' || first == 'R') malformed(off, "real value on non-real variable");
      std::string digits;
      for (char c : t.substr(1)) {
        char d = norm_digit(c);
        if (!d) malformed(off, "bad vector digit");
        digits += d;
      }
      if (digits.empty() || static_cast<int>(digits.size()) > known->second) malformed(off, "vector value width");
      record(code, extend(digits, known->second), off);
      continue;
    }
    char d = norm_digit(first);
    if (!d || t.size() < 2) malformed(off, "unexpected token '" + std::string(t) + "'");
    std::string code(t.substr(1));
    if (skipped_codes.count(code)) continue;
    auto known = width_of_code.find(code);
    if (known == width_of_code.end()) malformed(off, "change on undeclared id code '" + code + "'");
    record(code, extend(std::string(1, d), known->second), off);
  }
  if (!scopes.empty()) w.warnings.push_back("unterminated $scope");
  return w;
}

Waveform parse_vcd(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_vcd_text(text);
}

std::optional<std::size_t> SampledRun::find(const std::string& name) const {
  return best_match(signals, name, [](const SampledSignal& s) -> const std::string& { return s.name; });
}

SampledRun sample_at_clock(const Waveform& w, const std::string& clock) {
  const Var* clk = w.find_var(clock);
  if (!clk) throw Error(ErrorCode::UnknownSignal, "clock '" + clock + "' is not in the waveform");
  if (clk->width != 1) throw Error(ErrorCode::UnknownSignal, "clock '" + clock + "' is not a 1-bit variable");

  SampledRun run;
  run.clock_name = clk->name;
  char prev = 'x';
  for (const auto& c : w.changes_of(*clk)) {
    if (prev == '0' && c.value[0] == '1') run.cycle_times.push_back(c.time);
    prev = c.value[0];
  }
  if (run.cycle_times.empty()) throw Error(ErrorCode::NoClockEdges, "clock '" + clk->name + "' never rises");

  for (const auto& v : w.vars) {
    if (v.id_code == clk->id_code) continue;
    if (run.find(v.name) && run.signals[*run.find(v.name)].name == v.name) {
      run.warnings.push_back("duplicate variable '" + v.name + "' ignored");
      continue;
    }
    SampledSignal s;
    s.name = v.name;
    s.width = v.width;
    const auto& changes = w.changes_of(v);
    if (changes.empty()) run.warnings.push_back("'" + v.name + "' is never dumped; sampled as x");
    Value current(static_cast<std::size_t>(v.width), 'x');
    std::size_t next = 0;
    for (std::uint64_t edge : run.cycle_times) {
      while (next < changes.size() && changes[next].time < edge) current = changes[next++].value;
      s.values.push_back(current);
    }
    run.signals.push_back(std::move(s));
  }
  return run;
}

std::size_t write_vcd(const SampledRun& run, std::ostream& sink) {
  auto local = [](const std::string& name) {
    return name.rfind("top.", 0) == 0 ? name.substr(4) : name;
  };
  std::ostringstream out;
  out << "$timescale 1ns $end\n";
  out << "$scope module top $end\n";
  const std::string clock_code = id_code_for(0);
  const std::string clock_name = run.clock_name.empty() ? "clk" : local(run.clock_name);
  out << "$var wire 1 " << clock_code << ' ' << clock_name << " $end\n";
  std::vector<std::string> codes;
  for (std::size_t i = 0; i < run.signals.size(); ++i) {
    const auto& s = run.signals[i];
    codes.push_back(id_code_for(i + 1));
    out << "$var wire " << s.width << ' ' << codes.back() << ' ' << local(s.name) << " $end\n";
  }
  out << "$upscope $end\n$enddefinitions $end\n";

  const std::size_t n = run.num_cycles();
  auto emit = [&](std::size_t i, const Value& v) {
    if (run.signals[i].width == 1)
      out << v << codes[i] << '\n';
    else
      out << 'b' << v << ' ' << codes[i] << '\n';
  };
  if (n == 0) {
    const std::string text = out.str();
    sink << text;
    if (!sink) throw Error(ErrorCode::IoError, "failed to write VCD output");
    return text.size();
  }
  if (run.cycle_times.front() == 0)
    throw Error(ErrorCode::IoError, "first cycle time must be after time 0");
  for (std::size_t k = 1; k < n; ++k)
    if (run.cycle_times[k] < run.cycle_times[k - 1] + 2)
      throw Error(ErrorCode::IoError, "cycle times must be at least 2 apart");

  out << "#0\n$dumpvars\n0" << clock_code << '\n';
  for (std::size_t i = 0; i < run.signals.size(); ++i) emit(i, run.signals[i].values.at(0));
  out << "$end\n";
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t t = run.cycle_times[k];
    out << '#' << t << "\n1" << clock_code << '\n';
    if (k + 1 < n) {
      for (std::size_t i = 0; i < run.signals.size(); ++i)
        if (run.signals[i].values.at(k + 1) != run.signals[i].values.at(k)) emit(i, run.signals[i].values[k + 1]);
      out << '#' << t + (run.cycle_times[k + 1] - t) / 2 << "\n0" << clock_code << '\n';
    } else {
      out << '#' << t + 1 << "\n0" << clock_code << '\n';
    }
  }
  const std::string text = out.str();
  sink << text;
  if (!sink) throw Error(ErrorCode::IoError, "failed to write VCD output");
  return text.size();
}

}  // namespace simcheck::vcd
