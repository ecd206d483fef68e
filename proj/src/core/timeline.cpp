#include "llmgrid/core/timeline.hpp"

#include <algorithm>
#include <vector>

namespace llmgrid {

// ---------------------------------------------------------------- Manual

TimeUs ManualTimeline::now() const {
    std::lock_guard lk(mu_);
    return now_;
}

TaskId ManualTimeline::schedule_at(TimeUs t, std::function<void()> fn) {
    std::lock_guard lk(mu_);
    if (t <= now_) t = now_ + 1;
    TaskId id = next_id_++;
    events_.emplace(Key{t, next_seq_++}, std::make_pair(id, std::move(fn)));
    return id;
}

void ManualTimeline::cancel(TaskId id) {
    std::lock_guard lk(mu_);
    for (auto it = events_.begin(); it != events_.end(); ++it) {
        if (it->second.first == id) {
            events_.erase(it);
            return;
        }
    }
}

TimeUs ManualTimeline::advance(TimeUs d) {
    TimeUs target;
    {
        std::lock_guard lk(mu_);
        target = now_ + d;
    }
    for (;;) {
        std::function<void()> fn;
        {
            std::lock_guard lk(mu_);
            auto it = events_.begin();
            if (it == events_.end() || it->first.t > target) break;
            now_ = it->first.t;
            fn = std::move(it->second.second);
            events_.erase(it);
        }
        fn();
    }
    std::lock_guard lk(mu_);
    now_ = target;
    return now_;
}

bool ManualTimeline::advance_until(std::function<bool()> pred, TimeUs step, TimeUs deadline) {
    while (!pred()) {
        if (now() >= deadline) return false;
        advance(step);
    }
    return true;
}

std::size_t ManualTimeline::pending() const {
    std::lock_guard lk(mu_);
    return events_.size();
}

// -------------------------------------------------------------- RealTime

RealTimeTimeline::RealTimeTimeline()
    : epoch_wall_(wall_now_us()), epoch_steady_(steady_now_us()) {
    thread_ = std::thread([this] { run(); });
}

RealTimeTimeline::~RealTimeTimeline() { stop(); }

void RealTimeTimeline::stop() {
    {
        std::lock_guard lk(mu_);
        if (stopping_) return;
        stopping_ = true;
    }
    cv_.notify_all();
    if (thread_.joinable()) thread_.join();
}

TimeUs RealTimeTimeline::now() const {
    return epoch_wall_ + (steady_now_us() - epoch_steady_);
}

TaskId RealTimeTimeline::schedule_at(TimeUs t, std::function<void()> fn) {
    std::lock_guard lk(mu_);
    TaskId id = next_id_++;
    events_.emplace(Key{t, next_seq_++}, std::make_pair(id, std::move(fn)));
    cv_.notify_all();
    return id;
}

void RealTimeTimeline::cancel(TaskId id) {
    std::lock_guard lk(mu_);
    for (auto it = events_.begin(); it != events_.end(); ++it) {
        if (it->second.first == id) {
            events_.erase(it);
            return;
        }
    }
}

void RealTimeTimeline::run() {
    std::unique_lock lk(mu_);
    while (!stopping_) {
        if (events_.empty()) {
            cv_.wait(lk, [this] { return stopping_ || !events_.empty(); });
            continue;
        }
        TimeUs next = events_.begin()->first.t;
        TimeUs current = now();
        if (next > current) {
            cv_.wait_for(lk, std::chrono::microseconds(next - current));
            continue;
        }
        auto it = events_.begin();
        auto fn = std::move(it->second.second);
        events_.erase(it);
        lk.unlock();
        fn();
        lk.lock();
    }
}

// -------------------------------------------------------------- Periodic

PeriodicTask::PeriodicTask(Timeline& tl, TimeUs interval, std::function<void()> body)
    : tl_(tl), interval_(interval), body_(std::move(body)) {}

PeriodicTask::~PeriodicTask() { stop(); }

void PeriodicTask::start() {
    std::lock_guard lk(mu_);
    if (running_) return;
    running_ = true;
    anchor_ = tl_.now();
    arm(anchor_ + interval_);
}

void PeriodicTask::stop() {
    TaskId pending;
    {
        std::lock_guard lk(mu_);
        if (!running_) return;
        running_ = false;
        pending = pending_;
        pending_ = 0;
    }
    if (pending) tl_.cancel(pending);
}

void PeriodicTask::arm(TimeUs at) {
    pending_ = tl_.schedule_at(at, [this] { fire(); });
}

void PeriodicTask::fire() {
    {
        std::lock_guard lk(mu_);
        if (!running_) return;
        // Next tick stays on the anchor grid; a slow body collapses missed
        // ticks into the next grid point instead of queueing them.
        TimeUs current = tl_.now();
        std::uint64_t k = static_cast<std::uint64_t>((current - anchor_) / interval_) + 1;
        arm(anchor_ + static_cast<TimeUs>(k) * interval_);
    }
    if (busy_probe_ && busy_probe_()) {
        ++skipped_;
        return;
    }
    ++ticks_;
    body_();
}

}  // namespace llmgrid
