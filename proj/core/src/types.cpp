#include "slnet/types.hpp"

namespace slnet {

Scene scene_from_name(const std::string& name) {
  if (name == "static") return Scene::kStatic;
  if (name == "dynamic") return Scene::kDynamic;
  if (name == "unknown" || name.empty()) return Scene::kUnknown;
  throw DataError("unrecognized scene label: " + name);
}

RadarFrame::RadarFrame(Tensor d, std::size_t index) : data(std::move(d)), frame_index(index) {
  check(data.rank() == 3, "RadarFrame data must be (C_RF, W, H), got " + dims_str(data.dims()));
  check(data.dim(0) == kRfChannels, "RadarFrame must have exactly 2 RF channels");
  check(data.dim(1) == data.dim(2), "RadarFrame grid must be square");
  check(data.all_finite(), "RadarFrame contains non-finite values");
}

std::size_t RadarSequence::grid_size() const {
  check(!frames.empty(), "empty sequence has no grid size");
  return frames.front().grid_size();
}

void RadarSequence::validate() const {
  for (std::size_t i = 0; i < frames.size(); ++i) {
    check(frames[i].frame_index == i, "frame indices must be contiguous from 0");
    check(frames[i].data.same_dims(frames.front().data),
          "all frames must share (C_RF, W, H)");
  }
}

ConfMap::ConfMap(Tensor d) : data(std::move(d)) {
  check(data.rank() == 4, "ConfMap must be (C_cls, T, W, H), got " + dims_str(data.dims()));
  check(data.dim(2) == data.dim(3), "ConfMap grid must be square");
  for (std::size_t i = 0; i < data.size(); ++i)
    check(data[i] >= 0.0f && data[i] <= 1.0f, "ConfMap values must lie in [0,1]");
}

std::vector<std::size_t> snippet_starts(std::size_t num_frames, std::size_t window,
                                        std::size_t stride) {
  check(window >= 1 && stride >= 1, "window and stride must be >= 1");
  if (window > num_frames)
    throw DataError("window " + std::to_string(window) + " exceeds sequence length " +
                    std::to_string(num_frames));
  std::vector<std::size_t> starts;
  std::size_t last = num_frames - window;
  for (std::size_t s = 0;; s += stride) {
    if (s >= last) {
      starts.push_back(last);  // final window anchored to the sequence end
      break;
    }
    starts.push_back(s);
  }
  return starts;
}

std::vector<RadarSnippet> slice_snippets(const RadarSequence& seq, std::size_t window,
                                         std::size_t stride) {
  seq.validate();
  auto starts = snippet_starts(seq.num_frames(), window, stride);
  std::size_t g = seq.grid_size();
  std::vector<RadarSnippet> out;
  out.reserve(starts.size());
  for (std::size_t s : starts) {
    RadarSnippet snip;
    snip.data = Tensor({kRfChannels, window, g, g});
    snip.source_sequence = seq.sequence_id;
    snip.start_frame = s;
    snip.scene = seq.scene;
    for (std::size_t t = 0; t < window; ++t) {
      const Tensor& f = seq.frames[s + t].data;
      for (std::size_t c = 0; c < kRfChannels; ++c) {
        const float* src = f.data() + c * g * g;
        float* dst = snip.data.data() + snip.data.idx4(c, t, 0, 0);
        std::copy(src, src + g * g, dst);
      }
    }
    out.push_back(std::move(snip));
  }
  return out;
}

}  // namespace slnet
