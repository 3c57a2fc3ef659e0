#ifndef PLGEN_ANNOTATIONS_HPP
#define PLGEN_ANNOTATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plgen/raster.hpp"

namespace plgen {

/// Axis-aligned box in pixel units, half-open: [xmin, xmax) x [ymin, ymax).
/// x runs along columns, y along rows. class_id is a foreground class in
/// [1, 255).
struct BBox {
    std::uint8_t class_id = 1;
    int xmin = 0;
    int ymin = 0;
    int xmax = 0;
    int ymax = 0;

    int width() const { return xmax - xmin; }
    int height() const { return ymax - ymin; }
    std::int64_t area() const {
        return static_cast<std::int64_t>(width()) * height();
    }

    friend bool operator==(const BBox&, const BBox&) = default;
};

/// Pixel area shared by two boxes.
inline std::int64_t intersection_area(const BBox& a, const BBox& b) {
    const std::int64_t w =
        std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
    const std::int64_t h =
        std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
    return (w > 0 && h > 0) ? w * h : 0;
}

/// Intersect a box with [0,width) x [0,height); nullopt when nothing is left.
inline std::optional<BBox> clip_box(const BBox& box, int width, int height) {
    BBox out = box;
    out.xmin = std::max(out.xmin, 0);
    out.ymin = std::max(out.ymin, 0);
    out.xmax = std::min(out.xmax, width);
    out.ymax = std::min(out.ymax, height);
    if (out.xmax <= out.xmin || out.ymax <= out.ymin) return std::nullopt;
    return out;
}

/// All boxes annotated on one image. Boxes are stored clipped to the image.
struct ImageBoxes {
    std::string id;
    int width = 0;
    int height = 0;
    std::vector<BBox> boxes;

    friend bool operator==(const ImageBoxes&, const ImageBoxes&) = default;
};

/// Per-dataset box annotations; image ids are unique. dropped_boxes counts
/// annotations discarded at parse time because they lay fully outside their
/// image.
struct BoxCollection {
    std::vector<ImageBoxes> images;
    int dropped_boxes = 0;

    const ImageBoxes* find(std::string_view id) const {
        for (const auto& img : images)
            if (img.id == id) return &img;
        return nullptr;
    }

    friend bool operator==(const BoxCollection& a, const BoxCollection& b) {
        return a.images == b.images;
    }
};

/// Per-class CAM score planes in [0,1]. classes are distinct, strictly
/// ascending ids in [1, 254] (they must be emittable as label indices).
struct CamStack {
    Index height = 0;
    Index width = 0;
    std::vector<std::uint16_t> classes;
    std::vector<Plane<float>> scores; // parallel to classes

    friend bool operator==(const CamStack& a, const CamStack& b) {
        if (a.height != b.height || a.width != b.width || a.classes != b.classes)
            return false;
        for (std::size_t k = 0; k < a.scores.size(); ++k)
            if (!(a.scores[k] == b.scores[k]).all()) return false;
        return true;
    }
};

/// Throws FormatError naming the first offending field when the stack
/// violates its invariants (empty/descending classes, bad plane shape,
/// NaN or out-of-range score).
void validate_cam_stack(const CamStack& stack);

// --- box annotation JSON ---------------------------------------------------
//
// Schema (exact):
//   {"images":[{"id":string,"width":int,"height":int,
//               "boxes":[{"class":int,"xmin":int,"ymin":int,
//                         "xmax":int,"ymax":int}]}]}
// Coordinates are half-open pixel units. Unknown object keys are ignored.

/// Parse a box annotation document. Degenerate boxes (xmax <= xmin or
/// ymax <= ymin before clipping), duplicate image ids and bad class ids are
/// ValidationErrors; malformed JSON is a ParseError carrying the byte
/// offset. Boxes fully outside their image are dropped and counted;
/// partially outside boxes are clipped.
BoxCollection parse_box_file(std::string_view text);

/// Serialize back to the schema above. parse_box_file(write_box_file(c))
/// reproduces c for any valid collection.
std::string write_box_file(const BoxCollection& collection);

// --- label PNG ---------------------------------------------------------------

/// Decode an 8-bit grayscale or palette-indexed PNG into a label map. The
/// raw gray value / palette index is the class; palette colors are never
/// resolved. 16-bit, RGB and alpha images are unsupported-format errors.
LabelMap read_label_png(const std::vector<std::uint8_t>& bytes);

/// Encode as 8-bit grayscale PNG. write then read preserves every pixel.
std::vector<std::uint8_t> write_label_png(const LabelMap& map);

// --- CAMS container ----------------------------------------------------------
//
// Binary layout (little-endian):
//   magic   4 bytes  "CAMS"
//   version u8       1
//   pad     u8 u8 u8 0
//   height  u32
//   width   u32
//   K       u32      class count
//   classes K x u16  strictly ascending
//   scores  K x (H*W) f32, class-major then row-major

/// Decode a CAMS container. Bad magic, version, truncated or oversized
/// payload, non-ascending classes and NaN / out-of-range scores raise
/// FormatError with the offending field name.
CamStack read_cam_container(const std::vector<std::uint8_t>& bytes);

/// Encode a stack. Canonical (ascending-class) stacks re-encode
/// byte-identically after a read.
std::vector<std::uint8_t> write_cam_container(const CamStack& stack);

} // namespace plgen

#endif
