#pragma once

#include <map>
#include <string>

#include "divmod/presmod.hpp"

namespace divmod {

// Hand-derived expected values; every value carries the note explaining how
// it was obtained.
struct ExpectedIdeal {
    std::vector<std::string> generators;
    std::string note;
};

struct ExpectedCount {
    std::size_t value = 0;
    std::string note;
};

struct ExpectedFlag {
    bool value = false;
    std::string note;
};

struct ExpectedReduction {
    std::vector<std::size_t> columns;
    std::size_t r = 0;
    bool minimal = false;
    std::string note;
};

// One fixture: a module together with its ground truth and the list of
// proposition tags it witnesses.
struct CorpusEntry {
    std::string name;
    std::string source_file;
    RingPtr ring;
    EmbeddedModule module;
    std::uint64_t seed = 0;
    std::size_t rmax = 5;
    std::vector<std::string> tags;
    std::string note;
    std::map<std::string, ExpectedIdeal> ideals;
    std::map<std::string, ExpectedCount> counts;
    std::map<std::string, ExpectedFlag> flags;
    std::vector<ExpectedReduction> reductions;
};

struct PropositionCheck {
    std::string tag;
    std::string entry;
    bool pass = false;
    std::string detail;
};

struct TagSummary {
    std::string tag;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct CorpusSummary {
    std::vector<PropositionCheck> checks;  // entry order, then tag order
    std::vector<TagSummary> tags;          // sorted by tag name
    bool all_pass = true;
};

// Loads every *.json fixture in the directory, sorted by file name.
// Malformed fixtures throw ParseError naming the file.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

// Parses a single fixture from its JSON text.
CorpusEntry parse_corpus_entry(const std::string& json_text,
                               const std::string& source_name);

// Runs the checks for every tag of every entry (optionally restricted to one
// tag).  Failures are data, never exceptions.
CorpusSummary verify_all(const std::vector<CorpusEntry>& entries,
                         const std::string& tag_filter = "");

// Deterministic text table: one line per check, then per-tag totals.
std::string render_summary(const CorpusSummary& s);

// Canonical text form of an ideal: reduced basis under the ring order,
// "(0)" and "(1)" for the trivial cases, otherwise "(g1, g2, ...)".
std::string render_ideal(const Ideal& i);

}  // namespace divmod
