#include "qplane/context.hpp"

#include <sstream>

namespace qplane {

Context context_from_config(const std::string& text) {
    double gamma = 0.15, alpha = 0.5;
    double tol_exact = 1e-10, tol_oracle = 1e-6;
    std::string precision = "double";

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string key, eq, value;
        std::istringstream ls(line);
        if (!(ls >> key)) continue;
        if (!(ls >> eq) || eq != "=" || !(ls >> value))
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        if (key == "gamma") gamma = std::stod(value);
        else if (key == "alpha") alpha = std::stod(value);
        else if (key == "tol_exact") tol_exact = std::stod(value);
        else if (key == "tol_oracle") tol_oracle = std::stod(value);
        else if (key == "precision") precision = value;
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    if (precision != "double")
        throw std::invalid_argument("unsupported precision '" + precision + "'");

    Context ctx = make_context(gamma, alpha);
    ctx.tol_exact = tol_exact;
    ctx.tol_oracle = tol_oracle;
    ctx.precision = precision;
    return ctx;
}

}  // namespace qplane
