#include "gasketwalk/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "gasketwalk/errors.hpp"
#include "gasketwalk/formulas.hpp"

#ifdef GASKETWALK_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

#ifndef GASKETWALK_SOURCE_DATA_DIR
#define GASKETWALK_SOURCE_DATA_DIR ""
#endif

namespace gasketwalk {

namespace {

BigInt term_A007798(long n) { return to_integer(e_random_to_any(static_cast<int>(n))); }
BigInt term_A134939(long n) {
  return to_integer(e_one_to_three(static_cast<int>(n)) * Rational(pow3(static_cast<int>(n) - 1)));
}
BigInt term_A003462(long n) { return to_integer(e_one_to_any(static_cast<int>(n))); }
BigInt term_A226511(long k) { return to_integer(e_half_to_any(static_cast<int>(k) + 1)); }
BigInt term_A246961(long n) {
  return to_integer(e_random_to_one(static_cast<int>(n)) * Rational(pow3(static_cast<int>(n))));
}
BigInt term_A000244(long n) { return pow3(static_cast<unsigned long>(n)); }

struct Generator {
  SequenceSpec spec;
  BigInt (*term)(long);
};

const std::vector<Generator>& generators() {
  static const std::vector<Generator> table = {
      {{"A007798", 1, "expected random moves from a uniform start to any tower"}, term_A007798},
      {{"A134939", 1, "tower-to-tower expectations scaled by 3^(n-1)"}, term_A134939},
      {{"A003462", 1, "(3^n - 1)/2, expected moves from a tower to the next tower"}, term_A003462},
      {{"A226511", 0, "(3/2)(5^k - 3^k), expected moves from the half state to any tower"},
       term_A226511},
      {{"A246961", 1, "random-start-to-first-peg expectations scaled by 3^n"}, term_A246961},
      {{"A000244", 0, "powers of 3, the state counts"}, term_A000244},
  };
  return table;
}

std::string normalize_id(const std::string& id) {
  std::string out = id;
  if (!out.empty() && (out[0] == 'a' || out[0] == 'A')) out[0] = 'A';
  return out;
}

const Generator& generator_for(const std::string& id) {
  const std::string key = normalize_id(id);
  for (const Generator& g : generators()) {
    if (g.spec.id == key) return g;
  }
  throw UnknownSequence("unsupported sequence id: " + id);
}

}  // namespace

const std::vector<SequenceSpec>& supported_sequences() {
  static const std::vector<SequenceSpec> specs = [] {
    std::vector<SequenceSpec> v;
    for (const Generator& g : generators()) v.push_back(g.spec);
    return v;
  }();
  return specs;
}

const SequenceSpec& sequence_spec(const std::string& id) { return generator_for(id).spec; }

BigInt sequence_term(const std::string& id, long index) {
  const Generator& g = generator_for(id);
  if (index < g.spec.offset) {
    throw std::invalid_argument(g.spec.id + " starts at index " + std::to_string(g.spec.offset));
  }
  return g.term(index);
}

std::vector<BigInt> generate_sequence(const std::string& id, int count) {
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  const Generator& g = generator_for(id);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(g.term(g.spec.offset + i));
  return out;
}

std::vector<BFileEntry> parse_b_file(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    const auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;  // blank
    if (sv[first] == '#') continue;                 // comment
    std::istringstream fields{std::string(sv.substr(first))};
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (fields.fail()) throw ParseError("b-file line needs two fields", lineno);
    if (fields >> extra) throw ParseError("trailing data on b-file line", lineno);

    BFileEntry e;
    try {
      std::size_t used = 0;
      e.index = std::stol(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad b-file index '" + index_text + "'", lineno);
    }
    if (mpz_set_str(e.value.get_mpz_t(), value_text.c_str(), 10) != 0) {
      throw ParseError("bad b-file value '" + value_text + "'", lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("GASKETWALK_OEIS_DIR"); env && *env) return env;
  const std::string baked = GASKETWALK_SOURCE_DATA_DIR;
  std::error_code ec;
  if (!baked.empty() && std::filesystem::is_directory(baked, ec)) return baked;
  return "data/oeis";
}

namespace {

std::string fixture_path(const std::string& id, const std::string& dir) {
  const std::string d = dir.empty() ? default_fixture_dir() : dir;
  return d + "/" + id + ".txt";
}

}  // namespace

FixtureReport verify_against_fixture(const std::string& id, const std::string& fixture_dir) {
  const Generator& g = generator_for(id);
  FixtureReport r;
  r.id = g.spec.id;

  const std::string path = fixture_path(g.spec.id, fixture_dir);
  std::ifstream in(path);
  if (!in) {
    r.problems.push_back("fixture file not found: " + path);
    return r;
  }
  std::vector<BFileEntry> entries;
  try {
    entries = parse_b_file(in);
  } catch (const ParseError& e) {
    r.problems.push_back(path + ": " + e.what());
    return r;
  }
  if (entries.empty()) {
    r.warnings.push_back(path + ": no terms, vacuous pass");
    r.passed = true;
    return r;
  }
  for (const BFileEntry& e : entries) {
    if (e.index < g.spec.offset) {
      r.problems.push_back("index " + std::to_string(e.index) + " below sequence offset " +
                           std::to_string(g.spec.offset));
      continue;
    }
    const BigInt want = g.term(e.index);
    ++r.terms_checked;
    if (want != e.value) {
      r.problems.push_back("index " + std::to_string(e.index) + ": fixture has " +
                           e.value.get_str() + ", generator gives " + want.get_str());
    }
  }
  r.passed = r.problems.empty();
  return r;
}

std::vector<BFileEntry> fetch_remote(const std::string& id, const RemoteOptions& opt) {
  const Generator& g = generator_for(id);
  std::string base = opt.base_url;
  if (base.empty()) {
    if (const char* env = std::getenv("GASKETWALK_OEIS_BASE_URL"); env && *env) base = env;
  }
  if (base.empty()) base = "https://oeis.org";
  while (!base.empty() && base.back() == '/') base.pop_back();

  // https://oeis.org/A007798/b007798.txt
  const std::string path = "/" + g.spec.id + "/b" + g.spec.id.substr(1) + ".txt";

  httplib::Client client(base);
  client.set_connection_timeout(opt.timeout_seconds, 0);
  client.set_read_timeout(opt.timeout_seconds, 0);
  client.set_follow_location(true);

  httplib::Result res = client.Get(path);
  if (!res) {
    throw NetworkError("GET " + base + path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw NetworkError("GET " + base + path + " returned HTTP " + std::to_string(res->status));
  }
  std::istringstream body(res->body);
  return parse_b_file(body);
}

RemoteComparison compare_with_remote(const std::string& id, const std::string& fixture_dir,
                                     const RemoteOptions& opt) {
  const Generator& g = generator_for(id);
  RemoteComparison r;
  r.id = g.spec.id;

  const std::string path = fixture_path(g.spec.id, fixture_dir);
  std::ifstream in(path);
  if (!in) {
    r.fetch_error = "fixture file not found: " + path;
    return r;
  }
  std::vector<BFileEntry> local;
  try {
    local = parse_b_file(in);
  } catch (const ParseError& e) {
    r.fetch_error = std::string("fixture unreadable: ") + e.what();
    return r;
  }
  if (local.empty()) {
    r.fetch_error = "fixture has no terms to compare";
    return r;
  }

  std::vector<BFileEntry> remote;
  try {
    remote = fetch_remote(id, opt);
  } catch (const std::exception& e) {
    r.fetch_error = e.what();
    return r;
  }
  r.fetched = true;
  if (remote.empty()) {
    r.problems.push_back("remote b-file has no terms");
    return r;
  }

  // Try every remote occurrence of the first local term as the anchor.
  std::vector<long> shifts;
  for (const BFileEntry& e : remote) {
    if (e.value == local.front().value) shifts.push_back(e.index - local.front().index);
  }
  if (shifts.empty()) {
    r.problems.push_back("first fixture term " + local.front().value.get_str() +
                         " does not occur in the remote sequence");
    return r;
  }

  for (long shift : shifts) {
    std::size_t compared = 0;
    std::vector<std::string> problems;
    for (const BFileEntry& e : local) {
      const long want_index = e.index + shift;
      const auto it = std::find_if(remote.begin(), remote.end(), [want_index](const BFileEntry& re) {
        return re.index == want_index;
      });
      if (it == remote.end()) continue;  // remote file may be shorter
      ++compared;
      if (it->value != e.value) {
        problems.push_back("local index " + std::to_string(e.index) + " (remote " +
                           std::to_string(want_index) + "): " + e.value.get_str() + " vs " +
                           it->value.get_str());
      }
    }
    if (problems.empty() && compared > 0) {
      r.shift = shift;
      r.passed = true;
      r.terms_compared = compared;
      return r;
    }
    if (r.problems.empty()) {  // keep the first anchor's diagnostics
      r.shift = shift;
      r.terms_compared = compared;
      r.problems = std::move(problems);
    }
  }
  return r;
}

}  // namespace gasketwalk
