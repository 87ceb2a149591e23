#pragma once

#include <filesystem>
#include <iosfwd>

#include "genboot/automata.hpp"
#include "genboot/core.hpp"

namespace genboot {

// Log files: one `<count> <action> ...` entry per line, `#` comments and
// blank lines ignored. A count without actions is the empty trace.
//
// DFG files: `node <name> <freq>` and `edge <src> <dst> <freq>` records.
// `i` and `o` are the markers and need no node record; every other edge
// endpoint must be declared by an earlier node record.
//
// Readers throw ParseError carrying the offending line number. Writers emit
// a canonical order, so write(read(x)) is stable and read(write(v)) == v.

[[nodiscard]] EventLog read_log(std::istream& in);
[[nodiscard]] EventLog read_log(const std::filesystem::path& path);
void write_log(std::ostream& out, const EventLog& log);
void write_log(const std::filesystem::path& path, const EventLog& log);

[[nodiscard]] Dfg read_dfg(std::istream& in);
[[nodiscard]] Dfg read_dfg(const std::filesystem::path& path);
void write_dfg(std::ostream& out, const Dfg& g);
void write_dfg(const std::filesystem::path& path, const Dfg& g);

} // namespace genboot
