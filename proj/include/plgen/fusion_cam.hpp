#ifndef PLGEN_FUSION_CAM_HPP
#define PLGEN_FUSION_CAM_HPP

#include "plgen/annotations.hpp"
#include "plgen/raster.hpp"

namespace plgen {

struct CamFusionParams {
    double delta = 0.01; // score threshold, strict >
};

/// Class-driven pseudo-label generation. Per pixel: background where the
/// objectness prior is off; otherwise the argmax class over the declared CAM
/// planes when its score strictly exceeds delta, else background. Ties go to
/// the smallest class id. The output never contains the ignore value.
LabelMap fuse_cam(const CamStack& cam, const ObjectnessMask& obj,
                  const CamFusionParams& params);

/// Raw-CAM baseline: fuse_cam with an implicit all-true objectness mask.
LabelMap threshold_cam_raw(const CamStack& cam, const CamFusionParams& params);

} // namespace plgen

#endif
