from src.model.catalog import (
    GROUND_NAMES,
    LEVEL_SPANS,
    ZERO_NAMES,
    CatalogEntry,
    catalog_names,
    eigen_residual,
    load_catalog,
    named_state,
    named_states,
    projector_distances,
    span_projector,
    validate_catalog,
)
from src.model.hamiltonian import (
    ConservationReport,
    analytic_levels,
    build_hamiltonian,
    flip_all,
    numerical_levels,
    numerical_spectrum,
    plaquette,
    plaquette_products,
    verify_conserved,
)
from src.model.sectors import (
    plaquette_ground_action,
    project_onto_sector,
    sector_of,
    sector_projector,
    unit_configuration_check,
    z2_flip_signs,
)
from src.model.types import (
    DOUBLE_SPIN_SYMBOLS,
    Couplings,
    DoubleSpinSymbol,
    FourSpinState,
    GaugeSector,
    LevelEntry,
    LevelTable,
    configuration_index,
    index_arrows,
    index_symbols,
)
