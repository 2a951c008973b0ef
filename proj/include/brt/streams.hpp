#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "brt/errors.hpp"

namespace brt {

// Time-stamped enumeration event: stream `stream` enumerates `element` at
// stage `stage`.
struct StreamEvent {
  int stream;
  int element;
  int stage;

  bool operator==(const StreamEvent&) const = default;
};

// Finite-horizon model of a family of enumerable sets: stream e's set at
// stage s is everything it enumerated at stages <= s, monotone in s by
// construction.
class StreamFamily {
 public:
  StreamFamily() = default;

  StreamFamily(int num_streams, int horizon, std::vector<StreamEvent> events)
      : num_streams_(num_streams), horizon_(horizon), by_stream_(num_streams) {
    if (num_streams < 0 || horizon < 0) throw InputError("stream counts must be >= 0");
    for (const auto& ev : events) {
      if (ev.stream < 0 || ev.stream >= num_streams)
        throw InputError("stream index " + std::to_string(ev.stream) + " out of range");
      if (ev.element < 0 || ev.element >= horizon)
        throw InputError("stream element " + std::to_string(ev.element) + " outside horizon");
      if (ev.stage < 0 || ev.stage >= horizon)
        throw InputError("stream stage " + std::to_string(ev.stage) + " outside horizon");
      by_stream_[ev.stream].push_back({ev.element, ev.stage});
    }
    for (auto& v : by_stream_)
      std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
        return a.stage != b.stage ? a.stage < b.stage : a.element < b.element;
      });
    events_ = std::move(events);
  }

  int num_streams() const { return num_streams_; }
  int horizon() const { return horizon_; }
  const std::vector<StreamEvent>& events() const { return events_; }

  // Elements stream e has enumerated by stage `stage`, ascending, deduplicated.
  std::vector<int> enumerated_by(int e, int stage) const {
    check_stream(e);
    std::vector<int> out;
    for (const Entry& entry : by_stream_[e]) {
      if (entry.stage > stage) break;
      out.push_back(entry.element);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // The full member set within the horizon.
  std::vector<int> members(int e) const { return enumerated_by(e, horizon_ - 1); }

  // card of (enumerated_by(e, stage) intersected with [lo, hi]).
  int count_in_range(int e, int stage, int lo, int hi) const {
    int count = 0;
    for (int x : enumerated_by(e, stage))
      if (x >= lo && x <= hi) ++count;
    return count;
  }

 private:
  struct Entry {
    int element;
    int stage;
  };

  void check_stream(int e) const {
    if (e < 0 || e >= num_streams_) throw InputError("stream index out of range");
  }

  int num_streams_ = 0;
  int horizon_ = 0;
  std::vector<StreamEvent> events_;
  std::vector<std::vector<Entry>> by_stream_;
};

}  // namespace brt
