import logging

from model.spaceformModel import PrismType
from schemas.spaceformSchemas import (
    EquivRequest,
    EquivSchema,
    PrismComponentsSchema,
    PrismInfoSchema,
    spaceform_to_schema,
)
from services.moduliServices import prism_component_count
from services.spaceformServices import (
    prism_as_lens,
    prism_invariants,
    prism_presentation,
    spaceform_equivalent,
)

logger = logging.getLogger(__name__)


def handle_equiv(request: EquivRequest) -> dict:
    """Whether two spherical space forms are diffeomorphic"""
    first = request.first.to_domain()
    second = request.second.to_domain()
    equivalent = spaceform_equivalent(first, second)
    logger.info("%s ~ %s: %s", first, second, equivalent)
    return {
        "success": True,
        "message": "Space forms compared successfully",
        "data": EquivSchema(
            first=spaceform_to_schema(first),
            second=spaceform_to_schema(second),
            equivalent=equivalent,
        ).model_dump(mode="json", exclude_none=True),
    }


def get_prism_info(m: int, n: int) -> dict:
    """Group order, presentation and metric components of P(m, n)"""
    prism = PrismType(m=m, n=n)
    invariants = prism_invariants(prism)
    as_lens = prism_as_lens(prism)
    count = prism_component_count(prism)
    if isinstance(count, int):
        components = count
    else:
        components = PrismComponentsSchema(
            prism_type=count.prism_type,
            lens_type=str(count.lens_type),
            lens=spaceform_to_schema(count.lens),
        )
    logger.info("Prism manifold %s: order %d", prism, invariants.group_order)
    return {
        "success": True,
        "message": "Prism manifold retrieved successfully",
        "data": PrismInfoSchema(
            prism=spaceform_to_schema(prism),
            group_order=invariants.group_order,
            abelianization_order=invariants.abelianization_order,
            is_abelian=invariants.is_abelian,
            presentation=prism_presentation(prism),
            as_lens=None if as_lens is None else spaceform_to_schema(as_lens),
            components=components,
        ).model_dump(mode="json", exclude_none=True),
    }
