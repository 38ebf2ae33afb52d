#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>

#include "a4l/time.hpp"

namespace a4l {

// Every time-dependent component takes a Clock so tests can drive a
// simulated one.
class Clock {
public:
    virtual ~Clock() = default;
    virtual Timestamp now() const = 0;
};

class SystemClock final : public Clock {
public:
    Timestamp now() const override {
        using namespace std::chrono;
        return Timestamp{
            duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count()};
    }
};

class SimulatedClock final : public Clock {
public:
    explicit SimulatedClock(Timestamp start = Timestamp{0}) : now_ms_(start.millis) {}

    Timestamp now() const override { return Timestamp{now_ms_.load()}; }

    void set(Timestamp t) { now_ms_.store(t.millis); }
    void advance_millis(std::int64_t ms) { now_ms_.fetch_add(ms); }

private:
    std::atomic<std::int64_t> now_ms_;
};

inline std::shared_ptr<Clock> system_clock_instance() {
    static auto clock = std::make_shared<SystemClock>();
    return clock;
}

}  // namespace a4l
