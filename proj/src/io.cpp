#include "genboot/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genboot/error.hpp"

namespace genboot {

namespace {

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t begin = line.find_first_not_of(" \t\r\v\f", pos);
        if (begin == std::string_view::npos) {
            break;
        }
        std::size_t end = line.find_first_of(" \t\r\v\f", begin);
        if (end == std::string_view::npos) {
            end = line.size();
        }
        out.push_back(line.substr(begin, end - begin));
        pos = end;
    }
    return out;
}

/// Reads lines, skipping blanks and comments; `handle` gets the tokens.
template <class Handle>
void for_each_record(std::istream& in, Handle&& handle)
{
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto tokens = split(line);
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        try {
            handle(number, tokens);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(number, e.message());
        }
    }
    if (in.bad()) {
        throw ParseError(0, "read failure");
    }
}

std::uint64_t parse_count(std::size_t line, std::string_view token, bool positive)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    if (positive && value == 0) {
        throw ParseError(line, "count must be positive");
    }
    return value;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
    }
    return out;
}

Action node_name(std::string_view token)
{
    if (token == "i") {
        return Action::input_marker();
    }
    if (token == "o") {
        return Action::output_marker();
    }
    return Action(token);
}

} // namespace

EventLog read_log(std::istream& in)
{
    EventLog log;
    for_each_record(in, [&](std::size_t line, const std::vector<std::string_view>& tokens) {
        const std::uint64_t count = parse_count(line, tokens.front(), true);
        std::vector<Action> actions;
        actions.reserve(tokens.size() - 1);
        for (std::size_t j = 1; j < tokens.size(); ++j) {
            actions.emplace_back(tokens[j]);
        }
        log.add(Trace(std::move(actions)), count);
    });
    return log;
}

EventLog read_log(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_log(in);
}

void write_log(std::ostream& out, const EventLog& log)
{
    for (const auto& [trace, count] : log) {
        out << count;
        for (Action a : trace) {
            out << ' ' << a.name();
        }
        out << '\n';
    }
}

void write_log(const std::filesystem::path& path, const EventLog& log)
{
    auto out = open_out(path);
    write_log(out, log);
}

Dfg read_dfg(std::istream& in)
{
    Dfg g;
    std::set<Action> declared{Action::input_marker(), Action::output_marker()};
    std::set<Dfg::Arc> seen_arcs;
    std::set<Action> seen_nodes;
    for_each_record(in, [&](std::size_t line, const std::vector<std::string_view>& tokens) {
        const std::string_view kind = tokens.front();
        if (kind == "node") {
            if (tokens.size() != 3) {
                throw ParseError(line, "expected 'node <name> <freq>'");
            }
            const Action a = node_name(tokens[1]);
            if (!seen_nodes.insert(a).second) {
                throw ParseError(line, "duplicate node '" + a.name() + "'");
            }
            declared.insert(a);
            g.add_node(a, parse_count(line, tokens[2], false));
        } else if (kind == "edge") {
            if (tokens.size() != 4) {
                throw ParseError(line, "expected 'edge <src> <dst> <freq>'");
            }
            const Action from = node_name(tokens[1]);
            const Action to = node_name(tokens[2]);
            for (Action end : {from, to}) {
                if (!declared.contains(end)) {
                    throw ParseError(line, "edge references undeclared node '" + end.name() + "'");
                }
            }
            if (!seen_arcs.insert({from, to}).second) {
                throw ParseError(line, "duplicate edge " + from.name() + " -> " + to.name());
            }
            g.add_arc(from, to, parse_count(line, tokens[3], false));
        } else {
            throw ParseError(line, "unknown record '" + std::string(kind) + "'");
        }
    });
    return g;
}

Dfg read_dfg(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_dfg(in);
}

void write_dfg(std::ostream& out, const Dfg& g)
{
    const Action input = Action::input_marker();
    const Action output = Action::output_marker();
    out << "node i " << g.node_freq(input) << '\n';
    for (Action a : g.actions()) {
        out << "node " << a.name() << ' ' << g.node_freq(a) << '\n';
    }
    out << "node o " << g.node_freq(output) << '\n';
    for (const auto& [arc, freq] : g.arcs()) {
        out << "edge " << arc.first.name() << ' ' << arc.second.name() << ' ' << freq << '\n';
    }
}

void write_dfg(const std::filesystem::path& path, const Dfg& g)
{
    auto out = open_out(path);
    write_dfg(out, g);
}

} // namespace genboot
