#pragma once

#include <functional>
#include <string>

#include "coeffcat/gcat/category.hpp"

namespace coeffcat {

/// An additive functor given by its effect on objects and morphisms. The
/// categories are held by value (they share their state internally).
template <AdditiveCategory S, AdditiveCategory T>
class Functor {
 public:
  using ObjectMap = std::function<ObjectOf<T>(const ObjectOf<S>&)>;
  using MorphismMap = std::function<MorphismOf<T>(const MorphismOf<S>&)>;

  Functor(std::string name, S source, T target, ObjectMap onObject, MorphismMap onMorphism)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_(std::move(target)),
        onObject_(std::move(onObject)),
        onMorphism_(std::move(onMorphism)) {}

  const std::string& name() const { return name_; }
  const S& source() const { return source_; }
  const T& target() const { return target_; }
  ObjectOf<T> object(const ObjectOf<S>& x) const { return onObject_(x); }
  MorphismOf<T> morphism(const MorphismOf<S>& f) const { return onMorphism_(f); }

 private:
  std::string name_;
  S source_;
  T target_;
  ObjectMap onObject_;
  MorphismMap onMorphism_;
};

/// g o f.
template <AdditiveCategory S, AdditiveCategory T, AdditiveCategory U>
Functor<S, U> composeFunctors(const Functor<T, U>& g, const Functor<S, T>& f) {
  return Functor<S, U>(
      g.name() + " o " + f.name(), f.source(), g.target(), [f, g](const ObjectOf<S>& x) { return g.object(f.object(x)); },
      [f, g](const MorphismOf<S>& m) { return g.morphism(f.morphism(m)); });
}

}  // namespace coeffcat
