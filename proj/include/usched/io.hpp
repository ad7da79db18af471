#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "usched/instance.hpp"

namespace usched {

// Plain-text instance format:
//   c <comment>
//   p usched <n> <m> [T]
//   a <u> <v>          u precedes v, jobs numbered from 1
// Arcs are closed transitively on load. Throws ParseError with the offending line.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::filesystem::path& path);
Instance parse_instance_string(const std::string& text);

// Writes the header and the closed arc set in sorted order.
void emit_instance(const Instance& inst, std::ostream& out);
void emit_instance_file(const Instance& inst, const std::filesystem::path& path);
std::string emit_instance_string(const Instance& inst);

// One line per slot, "t: j1 j2 ...", both numbered from 1.
void write_schedule(const Schedule& sched, std::ostream& out);
// Reads the format of write_schedule; blank and "c" lines are skipped.
Schedule parse_schedule(std::istream& in);

}  // namespace usched
