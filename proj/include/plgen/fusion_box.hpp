#ifndef PLGEN_FUSION_BOX_HPP
#define PLGEN_FUSION_BOX_HPP

#include <optional>
#include <vector>

#include "plgen/annotations.hpp"
#include "plgen/raster.hpp"

namespace plgen {

struct BoxFusionParams {
    double alpha = 0.3;          // overlap-ratio threshold, strict >
    double inner_fraction = 0.6; // kept area fraction of overlapped boxes
    bool ignore_enabled = false;
    bool use_objectness = true;
};

/// Painting order: area descending, stable on ties, so smaller boxes are
/// painted later and end up in front. The first element is the largest box.
std::vector<BBox> order_boxes(std::vector<BBox> boxes);

/// Concentric sub-box covering `fraction` of the box area: each side is
/// scaled by sqrt(fraction) (rounded, at least 1 pixel) and centered with
/// floor offsets. Always contained in the original box.
BBox inner_box(const BBox& box, double fraction);

/// area(b0 intersect bk) / area(bk); 0 when disjoint. bk must have positive
/// area.
double overlap_ratio(const BBox& b0, const BBox& bk);

/// Box-driven pseudo-label generation. Boxes are painted over an all-zero
/// map in order_boxes order, each overwriting what is under its extent:
/// object pixels get the box class, non-object pixels background. When
/// ignore_enabled and a box other than the largest overlaps the largest box
/// by strictly more than alpha, only its inner_box keeps the class and the
/// outer ring becomes the ignore value (object pixels only). With
/// use_objectness=false every box pixel counts as object.
///
/// Mode map: use_objectness=false & ignore_enabled=false is a raw box fill;
/// use_objectness=true alone masks boxes with the prior; both flags on adds
/// the ignore strategy.
LabelMap fuse_box(Index height, Index width, const std::vector<BBox>& boxes,
                  const ObjectnessMask* obj, const BoxFusionParams& params);

} // namespace plgen

#endif
