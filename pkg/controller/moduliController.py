import logging

from schemas.manifoldSchemas import description_to_domain
from schemas.moduliSchemas import (
    ComponentsRequest,
    ComponentsSchema,
    SameComponentRequest,
    SameComponentSchema,
    component_report_to_schema,
    component_to_schema,
)
from schemas.spaceformSchemas import spaceform_to_schema
from services.moduliServices import component_id, enumerate_lens_components
from services.spaceformServices import lens_normalize

logger = logging.getLogger(__name__)


def handle_components(request: ComponentsRequest) -> dict:
    """Components of lens-type metrics on L(p, q) with slope numerator up to the bound"""
    lens = lens_normalize(request.p, request.q)
    reports = enumerate_lens_components(lens, request.bound)
    logger.info("%s, bound %d: %d component(s)", lens, request.bound, len(reports))
    return {
        "success": True,
        "message": "Components enumerated successfully",
        "data": ComponentsSchema(
            lens=spaceform_to_schema(lens),
            bound=request.bound,
            count=len(reports),
            components=[component_report_to_schema(report) for report in reports],
        ).model_dump(mode="json", exclude_none=True),
    }


def handle_same_component(request: SameComponentRequest) -> dict:
    first = component_id(description_to_domain(request.first))
    second = component_id(description_to_domain(request.second))
    same = first == second
    logger.info("Same component: %s", same)
    return {
        "success": True,
        "message": "Components compared successfully",
        "data": SameComponentSchema(
            first=component_to_schema(first),
            second=component_to_schema(second),
            same_component=same,
        ).model_dump(mode="json", exclude_none=True),
    }
