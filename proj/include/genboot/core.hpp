#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genboot {

/// An interned action label.
///
/// Actions are pointer-sized handles into a process-wide intern table, so
/// copying and equality are cheap; ordering is lexicographic on the name.
/// The names `i` and `o` are reserved for the DFG input/output markers and
/// can only be obtained through input_marker() / output_marker().
class Action {
public:
    /// Throws Error(InvalidAction) if `name` is empty, contains whitespace,
    /// or is one of the reserved marker names.
    explicit Action(std::string_view name);

    static Action input_marker();
    static Action output_marker();

    [[nodiscard]] const std::string& name() const noexcept { return *name_; }
    [[nodiscard]] bool is_marker() const noexcept;

    friend bool operator==(Action a, Action b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(Action a, Action b) noexcept
    {
        if (a.name_ == b.name_) {
            return std::strong_ordering::equal;
        }
        return a.name_->compare(*b.name_) < 0 ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }

private:
    explicit Action(const std::string* interned) noexcept : name_(interned) {}

    const std::string* name_;

    friend struct std::hash<Action>;
};

/// A finite sequence of actions. Positions in the public API are 1-based.
class Trace {
public:
    Trace() = default;
    explicit Trace(std::vector<Action> actions) : actions_(std::move(actions)) {}
    Trace(std::initializer_list<Action> actions) : actions_(actions) {}

    /// Parses whitespace-separated action names; "" gives the empty trace.
    static Trace parse(std::string_view text);

    [[nodiscard]] std::size_t length() const noexcept { return actions_.size(); }
    [[nodiscard]] bool empty() const noexcept { return actions_.empty(); }
    [[nodiscard]] std::span<const Action> actions() const noexcept { return actions_; }

    /// 1-based access. Throws Error(OutOfBounds).
    [[nodiscard]] Action at(std::size_t position) const;

    [[nodiscard]] auto begin() const noexcept { return actions_.begin(); }
    [[nodiscard]] auto end() const noexcept { return actions_.end(); }

    /// Space-separated rendering, the inverse of parse().
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Trace&, const Trace&) = default;
    friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.actions_.begin(), a.actions_.end(),
                                                      b.actions_.begin(), b.actions_.end());
    }

private:
    std::vector<Action> actions_;
};

/// The `n` consecutive actions of `t` starting at 1-based position `p`.
/// Throws Error(OutOfBounds) unless p >= 1 and p + n - 1 <= length(t).
[[nodiscard]] Trace subtrace(const Trace& t, std::size_t p, std::size_t n);

/// Actions 1..x of `t`; valid for 0 <= x <= length(t).
[[nodiscard]] Trace prefix(const Trace& t, std::size_t x);

/// Actions x..length(t) of `t`; valid for 1 <= x <= length(t) + 1, where
/// x = length(t) + 1 yields the empty trace.
[[nodiscard]] Trace suffix(const Trace& t, std::size_t x);

[[nodiscard]] Trace concat(const Trace& a, const Trace& b);

/// A finite multiset of traces.
class EventLog {
public:
    using Entries = std::map<Trace, std::uint64_t>;

    EventLog() = default;
    EventLog(std::initializer_list<std::pair<Trace, std::uint64_t>> entries);

    /// Adds `count` occurrences of `t`; a zero count is a no-op.
    void add(Trace t, std::uint64_t count = 1);

    [[nodiscard]] std::uint64_t multiplicity(const Trace& t) const;
    /// Total number of traces, counting multiplicity.
    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    /// Number of distinct traces, |support|.
    [[nodiscard]] std::size_t distinct() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
    [[nodiscard]] std::vector<Trace> support() const;
    [[nodiscard]] const Entries& entries() const noexcept { return entries_; }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const EventLog&, const EventLog&) = default;

private:
    Entries entries_;
    std::uint64_t size_ = 0;
};

/// Multiset union: multiplicities add.
[[nodiscard]] EventLog log_concat(const EventLog& a, const EventLog& b);

} // namespace genboot

template <>
struct std::hash<genboot::Action> {
    std::size_t operator()(genboot::Action a) const noexcept
    {
        return std::hash<const std::string*>{}(a.name_);
    }
};
