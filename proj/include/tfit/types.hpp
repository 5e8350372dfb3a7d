#pragma once

#include <string>
#include <vector>

namespace tfit {

enum class TypeKind { Int, Bool, Tensor, Shape, Unit, Tuple };

// The six value types of the language. Tuples are the only compound form;
// elems is empty for every other kind.
struct TfitType {
  TypeKind kind = TypeKind::Unit;
  std::vector<TfitType> elems;

  TfitType() = default;
  explicit TfitType(TypeKind k) : kind(k) {}
  static TfitType tuple(std::vector<TfitType> es) {
    TfitType t(TypeKind::Tuple);
    t.elems = std::move(es);
    return t;
  }

  bool is(TypeKind k) const { return kind == k; }
  bool operator==(const TfitType& o) const { return kind == o.kind && elems == o.elems; }
  bool operator!=(const TfitType& o) const { return !(*this == o); }

  std::string to_string() const {
    switch (kind) {
      case TypeKind::Int: return "Int";
      case TypeKind::Bool: return "Bool";
      case TypeKind::Tensor: return "Tensor";
      case TypeKind::Shape: return "Shape";
      case TypeKind::Unit: return "Unit";
      case TypeKind::Tuple: {
        std::string s = "(";
        for (size_t i = 0; i < elems.size(); ++i) {
          if (i) s += ", ";
          s += elems[i].to_string();
        }
        return s + ")";
      }
    }
    return "?";
  }
};

inline const TfitType kInt{TypeKind::Int};
inline const TfitType kBool{TypeKind::Bool};
inline const TfitType kTensor{TypeKind::Tensor};
inline const TfitType kShape{TypeKind::Shape};
inline const TfitType kUnit{TypeKind::Unit};

}  // namespace tfit
