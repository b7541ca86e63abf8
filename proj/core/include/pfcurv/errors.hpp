#pragma once

#include <stdexcept>
#include <string>

namespace pfcurv {

// Base class for all failures raised by this library. CLI maps subclasses of
// NumericalError to a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

struct TriangleInequalityViolated : InvalidInput {
  int triangle;
  explicit TriangleInequalityViolated(int tri)
      : InvalidInput("triangle inequality violated in triangle " + std::to_string(tri)),
        triangle(tri) {}
};

struct NonManifoldEdge : InvalidInput {
  int edge;
  explicit NonManifoldEdge(int e)
      : InvalidInput("edge " + std::to_string(e) + " is shared by more than two triangles"),
        edge(e) {}
};

struct InconsistentOrientation : InvalidInput {
  int edge;
  explicit InconsistentOrientation(int e)
      : InvalidInput("adjacent triangles traverse edge " + std::to_string(e) +
                     " in the same direction"),
        edge(e) {}
};

struct OpenFan : InvalidInput {
  int vertex;
  explicit OpenFan(int v)
      : InvalidInput("vertex " + std::to_string(v) + " has an open (boundary) triangle fan"),
        vertex(v) {}
};

struct NotDelaunay : NumericalError {
  int triangle;
  explicit NotDelaunay(int tri)
      : NumericalError("circumcenter of triangle " + std::to_string(tri) +
                       " lies outside the triangle"),
        triangle(tri) {}
};

struct DegenerateHinge : NumericalError {
  int edge;
  explicit DegenerateHinge(int e)
      : NumericalError("adjacent triangle normals at edge " + std::to_string(e) +
                       " are antiparallel"),
        edge(e) {}
};

struct DegenerateTetrahedron : NumericalError {
  explicit DegenerateTetrahedron(const std::string& what) : NumericalError(what) {}
};

struct EmptyRegion : NumericalError {
  int edge;
  explicit EmptyRegion(int e)
      : NumericalError("hinge region of edge " + std::to_string(e) + " has zero area"),
        edge(e) {}
};

struct StepFailure : NumericalError {
  using NumericalError::NumericalError;
};

struct NoConvergence : NumericalError {
  using NumericalError::NumericalError;
};

struct UnknownSurface : InvalidInput {
  explicit UnknownSurface(const std::string& name) : InvalidInput("unknown surface: " + name) {}
};

struct UnsupportedLayerCount : InvalidInput {
  explicit UnsupportedLayerCount(int layers)
      : InvalidInput("unsupported layer count: " + std::to_string(layers)) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace pfcurv
