app_name = "queertrace"
app_title = "Queertrace"
app_publisher = "Queertrace contributors"
app_description = "Queerified (super)algebras, their supertraces, and trace-derived Lax invariants"
app_license = "mit"

# Settings
# --------
# Defaults for every tunable. A site config JSON (see queertrace.config) may override any key,
# and CLI flags override both.

default_settings = {
	"default_seed": 42,
	"default_trials": 500,
	# psido truncation
	"psido_floor": -8,
	"product_floor_margin": 4,
	# weyl commutant search
	"degree_cap_margin": 6,
	"degree_cap_limit": 24,
	# lax integrator
	"lax_h": 1e-3,
	"lax_t_end": 1.0,
	"lax_k_max": 3,
	"log_level": "WARNING",
}

# Reproduction suites
# -------------------
# Run in order by `queertrace repro all`. Each entry resolves to a callable
# `suite(seed, trials) -> dict` with at least a "passed" key.

repro_suites = [
	"queertrace.repro.lebedev_values",
	"queertrace.repro.weyl_symmetry",
	"queertrace.repro.weyl_decomposition",
	"queertrace.repro.trace_counts",
	"queertrace.repro.structure_cases",
	"queertrace.repro.adler_vanishing",
	"queertrace.repro.super_calculus",
	"queertrace.repro.lax_conservation",
	"queertrace.repro.involution",
	"queertrace.repro.tensor_facts",
	"queertrace.repro.truncated_evidence",
]

# Reports
# -------
# `queertrace report <name>` resolves to queertrace.report.<name>.<name>.execute.

reports = [
	"trace_spaces",
	"structure_cases",
	"truncated_evidence",
	"conservation",
]

# Fixtures
# --------
# Algebra files shipped with the package, addressable by bare name from the CLI
# (e.g. `--algebra mat2.json`).

fixtures = [
	"mat2.json",
	"mat1_1.json",
	"zero2_2.json",
]
