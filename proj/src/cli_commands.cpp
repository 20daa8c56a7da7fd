#include "harmonia/cli_commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "harmonia/barcode_io.hpp"
#include "harmonia/bottleneck.hpp"
#include "harmonia/harness.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/persistence.hpp"

namespace harmonia {

namespace {

std::optional<std::string> slurp(const std::string& path, std::ostream& err) {
	if (path == "-") {
		std::ostringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		err << "cannot open '" << path << "' for reading\n";
		return std::nullopt;
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	if (in.bad()) {
		err << "read failure on '" << path << "'\n";
		return std::nullopt;
	}
	return ss.str();
}

bool spill(const std::string& path, const std::string& payload, std::ostream& out, std::ostream& err) {
	if (path == "-" || path.empty()) {
		out << payload;
		return true;
	}
	std::ofstream o(path, std::ios::binary);
	if (!o) {
		err << "cannot open '" << path << "' for writing\n";
		return false;
	}
	o << payload;
	o.flush();
	if (!o) {
		err << "write failure on '" << path << "'\n";
		return false;
	}
	return true;
}

barcode compute_barcode(const filtration& f, const std::string& algo, int dim, bool reps, backend bk) {
	barcode bc;
	if (algo == "persistence")
		bc = persistence_barcode(f, dim, reps);
	else if (algo == "canonical")
		bc = reps ? greedy_oracle_barcode(f, dim, bk) : canonical_barcode(f, dim, bk);
	else
		bc = subordinate_barcode(f, dim);
	bc.sort_canonical();
	return bc;
}

std::string trial_json(std::size_t index, const trial_report& r) {
	nlohmann::ordered_json j;
	j["trial"] = index;
	j["seed"] = r.seed;
	j["mode"] = value_mode_str(r.mode);
	j["dimension"] = r.p;
	j["simplex_count"] = r.simplex_count;
	j["eps_requested"] = rational_str(r.eps_requested);
	j["eps_actual"] = rational_str(r.eps_actual);
	j["d_canonical"] = time_str(r.d_canonical);
	j["d_persistence"] = time_str(r.d_persistence);
	j["pass"] = r.pass;
	return j.dump();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	if (const char* tv = std::getenv("HARMONIA_THREADS")) {
		int n = std::atoi(tv);
		if (n > 0) omp_set_num_threads(n);
	}

	CLI::App app{"exact persistent, harmonic and canonical barcodes for simplicial filtrations", "harmonia"};
	app.require_subcommand(1);
	app.set_version_flag("--version", "harmonia 0.1.0");

	std::string v_input;
	auto* sc_validate = app.add_subcommand("validate", "parse a filtration and report its shape");
	sc_validate->add_option("input", v_input, "filtration file (text or json), '-' for stdin")->required();

	std::string b_input, b_algo = "persistence", b_format = "json", b_backend = "dense", b_output = "-";
	int b_dim = 1;
	bool b_reps = false;
	auto* sc_barcode = app.add_subcommand("barcode", "compute a barcode of a filtration");
	sc_barcode->add_option("input", b_input, "filtration file, '-' for stdin")->required();
	sc_barcode->add_option("--dim", b_dim, "homology dimension (default 1)");
	sc_barcode->add_option("--algo", b_algo, "persistence | canonical | subordinate")
	    ->check(CLI::IsMember({"persistence", "canonical", "subordinate"}));
	sc_barcode->add_flag("--reps", b_reps, "include representative chains");
	sc_barcode->add_option("--format", b_format, "json | text")->check(CLI::IsMember({"json", "text"}));
	sc_barcode->add_option("--backend", b_backend, "dense | sparse")->check(CLI::IsMember({"dense", "sparse"}));
	sc_barcode->add_option("-o,--output", b_output, "output path, '-' for stdout");

	std::string k_left, k_right;
	bool k_matching = false;
	auto* sc_bottleneck = app.add_subcommand("bottleneck", "exact bottleneck distance between two barcode documents");
	sc_bottleneck->add_option("left", k_left, "barcode json document")->required();
	sc_bottleneck->add_option("right", k_right, "barcode json document")->required();
	sc_bottleneck->add_flag("--matching", k_matching, "also print the optimal matching");

	std::string r_input, r_output = "-", r_algo = "canonical";
	int r_dim = 1;
	auto* sc_render = app.add_subcommand("render", "draw a barcode as svg");
	sc_render->add_option("input", r_input, "barcode json document or filtration file")->required();
	sc_render->add_option("-o,--output", r_output, "output path, '-' for stdout");
	sc_render->add_option("--dim", r_dim, "dimension when the input is a filtration");
	sc_render->add_option("--algo", r_algo, "algorithm when the input is a filtration")
	    ->check(CLI::IsMember({"persistence", "canonical", "subordinate"}));

	std::string s_complex, s_eps, s_mode = "monotone";
	std::uint64_t s_seed = 1;
	int s_trials = 10, s_dim = 1, s_maxv = 7;
	auto* sc_stability =
	    app.add_subcommand("stability", "perturbation trials checking barcode distance against input distance");
	auto* opt_complex = sc_stability->add_option("--complex", s_complex, "filtration file to perturb");
	auto* opt_random = sc_stability->add_option("--random", s_seed, "base seed for random inputs");
	sc_stability->add_option("--eps", s_eps, "perturbation size (exact rational)");
	sc_stability->add_option("--trials", s_trials, "number of trials (default 10)");
	sc_stability->add_option("--dim", s_dim, "homology dimension (default 1)");
	sc_stability->add_option("--mode", s_mode, "lower_star | monotone")
	    ->check(CLI::IsMember({"lower_star", "monotone"}));
	sc_stability->add_option("--max-vertices", s_maxv, "vertex budget for random inputs (default 7)");

	std::vector<long> i_scales = {1, 10, 100, 1000, 10000};
	auto* sc_instability = app.add_subcommand("instability", "swap-pair barcode sensitivity as the time scale grows");
	sc_instability->add_option("--scales", i_scales, "time scales to evaluate");

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try {
		if (sc_validate->parsed()) {
			auto content = slurp(v_input, err);
			if (!content) return 1;
			filtration f = filtration::parse(*content);
			out << "ok: " << f.size() << " simplices, max dimension " << f.max_dim() << ", "
			    << f.critical_times().size() << " critical times\n";
			return 0;
		}

		if (sc_barcode->parsed()) {
			if (b_dim < 0) throw std::invalid_argument("--dim must be nonnegative");
			auto content = slurp(b_input, err);
			if (!content) return 1;
			filtration f = filtration::parse(*content);
			backend bk = b_backend == "sparse" ? backend::sparse : backend::dense;
			barcode bc = compute_barcode(f, b_algo, b_dim, b_reps, bk);
			document_options opt;
			opt.algorithm = b_algo;
			opt.include_representatives = b_reps;
			opt.input_hash = fnv1a64_hex(f.to_text());
			std::string payload = b_format == "json" ? barcode_document_json(bc, opt) : barcode_document_text(bc);
			return spill(b_output, payload, out, err) ? 0 : 1;
		}

		if (sc_bottleneck->parsed()) {
			auto ca = slurp(k_left, err);
			if (!ca) return 1;
			auto cb = slurp(k_right, err);
			if (!cb) return 1;
			barcode a = parse_barcode_document(*ca);
			barcode b = parse_barcode_document(*cb);
			bottleneck_result res = bottleneck_distance(a, b);
			out << time_str(res.distance) << "\n";
			if (k_matching) {
				for (const auto& pr : res.pairs)
					out << "pair [" << rational_str(a.bars[pr.left].birth) << "," << time_str(a.bars[pr.left].death)
					    << ") -- [" << rational_str(b.bars[pr.right].birth) << ","
					    << time_str(b.bars[pr.right].death) << ")\n";
				for (std::size_t i : res.left_to_diagonal)
					out << "left-diagonal [" << rational_str(a.bars[i].birth) << "," << time_str(a.bars[i].death)
					    << ")\n";
				for (std::size_t j : res.right_to_diagonal)
					out << "right-diagonal [" << rational_str(b.bars[j].birth) << "," << time_str(b.bars[j].death)
					    << ")\n";
			}
			return 0;
		}

		if (sc_render->parsed()) {
			auto content = slurp(r_input, err);
			if (!content) return 1;
			barcode bc;
			std::string title;
			bool is_doc = false;
			{
				auto probe = nlohmann::json::parse(*content, nullptr, false);
				is_doc = probe.is_object() && probe.contains("bars");
			}
			if (is_doc) {
				bc = parse_barcode_document(*content);
				bc.sort_canonical();
				title = "barcode, dimension " + std::to_string(bc.p);
			} else {
				filtration f = filtration::parse(*content);
				if (r_dim < 0) throw std::invalid_argument("--dim must be nonnegative");
				bc = compute_barcode(f, r_algo, r_dim, false, backend::dense);
				title = r_algo + " barcode, dimension " + std::to_string(r_dim);
			}
			return spill(r_output, render_barcode_svg(bc, title), out, err) ? 0 : 1;
		}

		if (sc_stability->parsed()) {
			const bool use_complex = opt_complex->count() > 0;
			const bool use_random = opt_random->count() > 0;
			if (use_complex == use_random)
				throw std::invalid_argument("stability: exactly one of --complex and --random is required");
			if (s_trials < 1) throw std::invalid_argument("--trials must be positive");
			std::optional<rational> eps;
			if (!s_eps.empty()) {
				eps = parse_rational(s_eps);
				if (*eps <= 0) throw std::invalid_argument("--eps must be positive");
			}
			value_mode mode = s_mode == "lower_star" ? value_mode::lower_star : value_mode::monotone;

			std::optional<filtration> given;
			if (use_complex) {
				if (!eps) throw std::invalid_argument("stability: --eps is required with --complex");
				auto content = slurp(s_complex, err);
				if (!content) return 1;
				given = filtration::parse(*content);
			}

			bool all_pass = true;
			for (int i = 0; i < s_trials; ++i) {
				trial_report r = given ? stability_trial_on(*given, *eps, s_seed + static_cast<std::uint64_t>(i),
				                                            s_dim, mode)
				                       : stability_trial(s_seed + static_cast<std::uint64_t>(i), s_maxv, s_dim,
				                                         mode, eps);
				all_pass = all_pass && r.pass;
				out << trial_json(static_cast<std::size_t>(i), r) << "\n";
			}
			nlohmann::ordered_json summary;
			summary["trials"] = s_trials;
			summary["all_pass"] = all_pass;
			out << summary.dump() << "\n";
			return all_pass ? 0 : 3;
		}

		if (sc_instability->parsed()) {
			for (long s : i_scales)
				if (s < 1) throw std::invalid_argument("--scales entries must be positive");
			out << "scale input_shift d_subordinate d_canonical d_persistence\n";
			for (const instability_row& row : instability_demo(i_scales))
				out << row.scale << " " << rational_str(row.input_shift) << " " << time_str(row.d_subordinate)
				    << " " << time_str(row.d_canonical) << " " << time_str(row.d_persistence) << "\n";
			return 0;
		}
	} catch (const invariant_violation& e) {
		err << "internal invariant violated: " << e.what() << "\n";
		return 3;
	} catch (const filtration_error& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const chain_error& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const bad_rational& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const nlohmann::json::exception& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}

}  // namespace harmonia
