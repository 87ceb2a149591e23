#include "genboot/core.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_set>

#include "genboot/error.hpp"

namespace genboot {

namespace {

constexpr std::string_view input_name = "i";
constexpr std::string_view output_name = "o";

class InternTable {
public:
    const std::string* intern(std::string_view name)
    {
        std::lock_guard lock(mutex_);
        return &*names_.emplace(name).first;
    }

private:
    std::mutex mutex_;
    std::unordered_set<std::string> names_; // node-based: element addresses are stable
};

InternTable& intern_table()
{
    static InternTable table;
    return table;
}

bool has_space(std::string_view s)
{
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

Action::Action(std::string_view name)
{
    if (name.empty()) {
        throw Error(ErrorCode::InvalidAction, "action name is empty");
    }
    if (has_space(name)) {
        throw Error(ErrorCode::InvalidAction, "action name '" + std::string(name) + "' contains whitespace");
    }
    if (name == input_name || name == output_name) {
        throw Error(ErrorCode::InvalidAction, "action name '" + std::string(name) + "' is reserved");
    }
    name_ = intern_table().intern(name);
}

Action Action::input_marker()
{
    static const std::string* const interned = intern_table().intern(input_name);
    return Action(interned);
}

Action Action::output_marker()
{
    static const std::string* const interned = intern_table().intern(output_name);
    return Action(interned);
}

bool Action::is_marker() const noexcept
{
    return *this == input_marker() || *this == output_marker();
}

Trace Trace::parse(std::string_view text)
{
    std::vector<Action> actions;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        const std::size_t begin = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos > begin) {
            actions.emplace_back(text.substr(begin, pos - begin));
        }
    }
    return Trace(std::move(actions));
}

Action Trace::at(std::size_t position) const
{
    if (position < 1 || position > actions_.size()) {
        throw Error(ErrorCode::OutOfBounds, "position " + std::to_string(position) +
                                                " outside trace of length " +
                                                std::to_string(actions_.size()));
    }
    return actions_[position - 1];
}

std::string Trace::to_string() const
{
    std::string out;
    for (const Action& a : actions_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += a.name();
    }
    return out;
}

Trace subtrace(const Trace& t, std::size_t p, std::size_t n)
{
    if (p < 1 || p + n - 1 > t.length()) {
        throw Error(ErrorCode::OutOfBounds, "subtrace (" + std::to_string(p) + ", " +
                                                std::to_string(n) + ") outside trace of length " +
                                                std::to_string(t.length()));
    }
    const auto actions = t.actions();
    return Trace(std::vector<Action>(actions.begin() + static_cast<std::ptrdiff_t>(p - 1),
                                     actions.begin() + static_cast<std::ptrdiff_t>(p - 1 + n)));
}

Trace prefix(const Trace& t, std::size_t x)
{
    if (x > t.length()) {
        throw Error(ErrorCode::OutOfBounds, "prefix " + std::to_string(x) +
                                                " outside trace of length " +
                                                std::to_string(t.length()));
    }
    const auto actions = t.actions();
    return Trace(std::vector<Action>(actions.begin(), actions.begin() + static_cast<std::ptrdiff_t>(x)));
}

Trace suffix(const Trace& t, std::size_t x)
{
    if (x < 1 || x > t.length() + 1) {
        throw Error(ErrorCode::OutOfBounds, "suffix " + std::to_string(x) +
                                                " outside trace of length " +
                                                std::to_string(t.length()));
    }
    const auto actions = t.actions();
    return Trace(std::vector<Action>(actions.begin() + static_cast<std::ptrdiff_t>(x - 1), actions.end()));
}

Trace concat(const Trace& a, const Trace& b)
{
    std::vector<Action> out;
    out.reserve(a.length() + b.length());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Trace(std::move(out));
}

EventLog::EventLog(std::initializer_list<std::pair<Trace, std::uint64_t>> entries)
{
    for (const auto& [trace, count] : entries) {
        add(trace, count);
    }
}

void EventLog::add(Trace t, std::uint64_t count)
{
    if (count == 0) {
        return;
    }
    entries_[std::move(t)] += count;
    size_ += count;
}

std::uint64_t EventLog::multiplicity(const Trace& t) const
{
    const auto it = entries_.find(t);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<Trace> EventLog::support() const
{
    std::vector<Trace> out;
    out.reserve(entries_.size());
    for (const auto& [trace, count] : entries_) {
        out.push_back(trace);
    }
    return out;
}

EventLog log_concat(const EventLog& a, const EventLog& b)
{
    EventLog out = a;
    for (const auto& [trace, count] : b) {
        out.add(trace, count);
    }
    return out;
}

} // namespace genboot
