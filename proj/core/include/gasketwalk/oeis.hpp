#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gasketwalk/rational.hpp"

namespace gasketwalk {

/// One catalogued integer sequence: how to generate it and where its terms
/// start.  The six supported sequences are integer rescalings of the five
/// expectation formulas plus the powers of 3 used as denominators.
struct SequenceSpec {
  std::string id;           ///< canonical "Annnnnn"
  long offset;              ///< index of the first term
  std::string description;  ///< formula in plain words
};

const std::vector<SequenceSpec>& supported_sequences();

/// Spec for a (case-normalized) id; throws UnknownSequence.
const SequenceSpec& sequence_spec(const std::string& id);

/// Term at a given index (index >= offset); throws UnknownSequence,
/// std::invalid_argument below the offset.
BigInt sequence_term(const std::string& id, long index);

/// First `count` terms starting at the sequence's offset.
std::vector<BigInt> generate_sequence(const std::string& id, int count);

/// One "index value" line of a b-file.
struct BFileEntry {
  long index;
  BigInt value;
};

/// Parses b-file text: "index value" per line, '#' comments and blank lines
/// skipped.  Throws ParseError naming the 1-based offending line.
std::vector<BFileEntry> parse_b_file(std::istream& in);

/// Where the bundled fixture files live: $GASKETWALK_OEIS_DIR if set, else
/// the build-time source data directory if it still exists, else ./data/oeis.
std::string default_fixture_dir();

struct FixtureReport {
  std::string id;
  bool passed = false;
  std::size_t terms_checked = 0;
  std::vector<std::string> problems;  ///< mismatches; any entry means failure
  std::vector<std::string> warnings;  ///< oddities that do not fail the check
};

/// Checks every fixture term against the generator at its index.  An empty
/// fixture passes vacuously with a warning; a missing or unreadable file
/// fails.
FixtureReport verify_against_fixture(const std::string& id, const std::string& fixture_dir = "");

struct RemoteOptions {
  std::string base_url;     ///< empty: $GASKETWALK_OEIS_BASE_URL or https://oeis.org
  int timeout_seconds = 10;
};

/// Downloads and parses the sequence's b-file.  Throws NetworkError (no
/// connectivity, HTTP failure) or ParseError (malformed body).
std::vector<BFileEntry> fetch_remote(const std::string& id, const RemoteOptions& opt = {});

/// Fixture terms checked against a remote b-file.  Alignment: find the shift
/// (remote index minus local index) at which every overlapping term agrees,
/// trying each remote occurrence of the first fixture term; a nonzero shift
/// is reported, not failed, since published offsets drift.
struct RemoteComparison {
  std::string id;
  bool fetched = false;
  std::string fetch_error;  ///< set when !fetched; verification then falls
                            ///< back to fixtures only
  long shift = 0;
  bool passed = false;
  std::size_t terms_compared = 0;
  std::vector<std::string> problems;
};

RemoteComparison compare_with_remote(const std::string& id, const std::string& fixture_dir = "",
                                     const RemoteOptions& opt = {});

}  // namespace gasketwalk
