#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "llmgrid/core/result.hpp"
#include "llmgrid/core/time.hpp"

namespace llmgrid {

using TaskId = std::uint64_t;

/// Scheduling surface shared by the manual (simulated) clock and the
/// real-time clock. Every timed behavior in the control plane -- reconcile
/// waits, health sweeps, token emission, alert windows -- is expressed
/// against this interface, so sim and production wiring run the same code.
class Timeline {
public:
    virtual ~Timeline() = default;

    virtual TimeUs now() const = 0;
    virtual TaskId schedule_at(TimeUs t, std::function<void()> fn) = 0;
    virtual void cancel(TaskId id) = 0;

    /// Delays are clamped to >= 1us so a zero delay still lands strictly in
    /// the future of the current instant.
    TaskId schedule_after(TimeUs delay, std::function<void()> fn) {
        if (delay < 1) delay = 1;
        return schedule_at(now() + delay, std::move(fn));
    }
};

/// Manual-mode clock: time moves only through advance(). Events fire in
/// (now, now+d], ordered by (timestamp, scheduling sequence), which makes
/// whole-stack scenarios deterministic under a fixed seed.
class ManualTimeline : public Timeline {
public:
    explicit ManualTimeline(TimeUs start = 0) : now_(start) {}

    TimeUs now() const override;
    TaskId schedule_at(TimeUs t, std::function<void()> fn) override;
    void cancel(TaskId id) override;

    /// Fires all events in (now, now+d] in timestamp order, then sets
    /// now = now + d. advance(0) fires nothing.
    TimeUs advance(TimeUs d);

    /// advance() in fixed steps until the predicate holds or the deadline
    /// passes. Returns true if the predicate held.
    bool advance_until(std::function<bool()> pred, TimeUs step, TimeUs deadline);

    std::size_t pending() const;

private:
    struct Key {
        TimeUs t;
        std::uint64_t seq;
        bool operator<(const Key& o) const {
            return t != o.t ? t < o.t : seq < o.seq;
        }
    };

    mutable std::mutex mu_;
    TimeUs now_;
    std::uint64_t next_seq_ = 1;
    std::map<Key, std::pair<TaskId, std::function<void()>>> events_;
    std::uint64_t next_id_ = 1;
};

/// Wall-clock timeline backed by a dispatcher thread. now() is anchored to
/// the system clock at construction and advances with steady time.
class RealTimeTimeline : public Timeline {
public:
    RealTimeTimeline();
    ~RealTimeTimeline() override;

    TimeUs now() const override;
    TaskId schedule_at(TimeUs t, std::function<void()> fn) override;
    void cancel(TaskId id) override;

    void stop();

private:
    void run();

    struct Key {
        TimeUs t;
        std::uint64_t seq;
        bool operator<(const Key& o) const {
            return t != o.t ? t < o.t : seq < o.seq;
        }
    };

    TimeUs epoch_wall_;
    TimeUs epoch_steady_;
    mutable std::mutex mu_;
    std::condition_variable cv_;
    std::map<Key, std::pair<TaskId, std::function<void()>>> events_;
    std::uint64_t next_seq_ = 1;
    std::uint64_t next_id_ = 1;
    bool stopping_ = false;
    std::thread thread_;
};

/// Fixed-rate periodic task. Ticks fire at anchor + k*interval; a tick that
/// comes due while the previous body is still running is skipped, never
/// queued. stop() cancels the pending tick.
class PeriodicTask {
public:
    PeriodicTask(Timeline& tl, TimeUs interval, std::function<void()> body);
    ~PeriodicTask();

    void start();
    void stop();

    std::uint64_t ticks_fired() const { return ticks_; }
    std::uint64_t ticks_skipped() const { return skipped_; }

    /// The body checks this through its owner; exposed for services whose
    /// work outlives the tick (timeline continuations).
    void set_busy_probe(std::function<bool()> probe) { busy_probe_ = std::move(probe); }

private:
    void arm(TimeUs at);
    void fire();

    Timeline& tl_;
    TimeUs interval_;
    std::function<void()> body_;
    std::function<bool()> busy_probe_;
    TimeUs anchor_ = 0;
    TaskId pending_ = 0;
    bool running_ = false;
    std::uint64_t ticks_ = 0;
    std::uint64_t skipped_ = 0;
    std::mutex mu_;
};

}  // namespace llmgrid
