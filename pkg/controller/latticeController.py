import logging

from model.latticeModel import LatticeVector
from schemas.latticeSchemas import MarkingRequest, marking_to_schema
from services.latticeServices import marking_params, normalized_marking

logger = logging.getLogger(__name__)


def handle_marking(request: MarkingRequest) -> dict:
    """Normalized marking (v, vhat) of a foliation direction with its exact parameters"""
    torus = request.torus.to_domain()
    v = LatticeVector(*request.v)
    marking = normalized_marking(torus, v)
    r_sq, _, t_sq = marking_params(torus, marking)
    logger.info("Normalized marking of %s: vhat=%s theta=%s", v.as_list(), marking.vhat.as_list(), marking.theta)
    return {
        "success": True,
        "message": "Marking normalized successfully",
        "data": marking_to_schema(marking, r_sq, t_sq).model_dump(mode="json"),
    }
