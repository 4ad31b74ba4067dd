package org.fixture.api;

import org.apache.log4j.Logger;

public class CreatePortForwardingRuleCmd extends BaseAsyncCreateCmd {
    public static final Logger s_logger = Logger.getLogger(CreatePortForwardingRuleCmd.class.getName());

    private RulesService rulesService;
    private Long ipAddressId;

    @Override
    public void create() {
        try {
            PortForwardingRule result = rulesService.createPortForwardingRule(this, ipAddressId);
            setEntityId(result.getId());
        } catch (NetworkRuleConflictException ex) {
            s_logger.info("Network rule conflict: ", ex);
            s_logger.trace("Network Rule Conflict: ", ex);
            throw new ServerApiException(ApiErrorCode.NETWORK_RULE_CONFLICT_ERROR, ex.getMessage());
        }
    }
}
