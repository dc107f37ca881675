#pragma once

#include <string>

#include "rzs/closedform/closed_form.hpp"

namespace rzs::closedform {

enum class RenderFormat { TEXT, LATEX };

/// Deterministic rendering in canonical term order, the constant term last.
/// TEXT is ASCII apart from the middle dot joining factors, e.g.
/// "(7/3)·log2 - gamma - 12·logA + 2". LATEX is math-mode content.
std::string render(const ClosedForm& cf, RenderFormat format);
std::string render_atom(const Atom& a, RenderFormat format);

/// Wraps math-mode content in a minimal document that compiles standalone.
std::string latex_document(const std::string& math);

}  // namespace rzs::closedform
